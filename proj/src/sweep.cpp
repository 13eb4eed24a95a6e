#include "mtx/sweep.hpp"

namespace mtx {

CodePredicates eval_predicates(const MTCode& code, bool need_lcd) {
    CodePredicates out;
    const FqMat& span = code.span_matrix();
    out.dim = span.nrows();
    const Field* F = code.field();
    bool so = true;
    for (size_t i = 0; i < span.nrows() && so; ++i)
        for (size_t j = i; j < span.nrows() && so; ++j)
            if (dot(F, span.rows[i], span.rows[j]) != 0) so = false;
    out.self_orthogonal = so;
    out.self_dual = so && 2 * out.dim == code.length();
    if (need_lcd) {
        FqMat ns = nullspace(span);
        if (out.dim == 0) {
            out.lcd = true;
        } else {
            FqMat stacked(F, span.cols);
            for (const auto& r : span.rows) stacked.add_row(r);
            for (const auto& r : ns.rows) stacked.add_row(r);
            out.lcd = (rank_of(stacked) == span.nrows() + ns.nrows());
        }
    }
    return out;
}

BigUint sweep_size(const Spectrum& spec) { return count_all(spec); }

void sweep_all_codes(const SpectrumPtr& spec,
                     const std::function<void(const std::vector<ConstituentCode>&,
                                              const MTCode&)>& visit) {
    ConcatContext ctx(spec);
    const size_t r = spec->factor_count();
    // all admissible subspaces per factor, canonical enumeration order
    std::vector<std::vector<ConstituentCode>> choices(r);
    for (size_t w = 0; w < r; ++w) {
        const FactorInfo& fi = spec->factor(w);
        std::vector<int> mask;
        for (int e : fi.eps) mask.push_back(e);
        enumerate_subspaces_masked(fi.constituent_field, spec->ell(), mask,
                                   [&](const FqMat& m) {
                                       ConstituentCode cc;
                                       cc.w = w;
                                       cc.field = fi.constituent_field;
                                       cc.basis = m;
                                       rref(cc.basis);
                                       choices[w].push_back(std::move(cc));
                                   });
    }
    std::vector<size_t> pick(r, 0);
    std::vector<ConstituentCode> parts(r);
    while (true) {
        for (size_t w = 0; w < r; ++w) parts[w] = choices[w][pick[w]];
        MTCode code = build_from_constituents(ctx, parts);
        visit(parts, code);
        size_t w = 0;
        while (w < r) {
            if (++pick[w] < choices[w].size()) break;
            pick[w] = 0;
            ++w;
        }
        if (w == r) break;
    }
}

} // namespace mtx
