#include "mtx/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace mtx {

DistanceResult min_distance_exact(const MTCode& c, uint64_t budget) {
    const FqMat& span = c.span_matrix();
    require(span.nrows() > 0, "min_distance: zero code has no minimum distance");
    const Field* F = c.field();
    const FieldOps& ops = F->ops();
    const uint64_t q = F->order();
    const size_t k = span.nrows(), n = span.cols;

    // words to enumerate: q^k - 1 (nonzero combinations)
    bool over = false;
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) {
        if (total > budget / q) {
            over = true;
            break;
        }
        total *= q;
    }

    // scaled[j][t] = t * row_j for every element index t
    std::vector<std::vector<std::vector<uint32_t>>> scaled(k);
    for (size_t j = 0; j < k; ++j) {
        scaled[j].resize(q);
        for (uint64_t t = 0; t < q; ++t) {
            std::vector<uint32_t> r(n);
            for (size_t col = 0; col < n; ++col)
                r[col] = ops.mul(static_cast<uint32_t>(t), span.rows[j][col]);
            scaled[j][t] = std::move(r);
        }
    }

    std::vector<uint32_t> digits(k, 0);
    std::vector<uint32_t> word(n, 0);
    size_t best = n + 1;
    uint64_t count = 0;
    DistanceResult res;
    while (true) {
        // odometer increment; on digit change update word incrementally
        size_t j = 0;
        while (j < k) {
            const uint32_t old = digits[j];
            const uint32_t neu = (old + 1 == q) ? 0 : old + 1;
            digits[j] = neu;
            for (size_t col = 0; col < n; ++col)
                word[col] = ops.add(ops.sub(word[col], scaled[j][old][col]),
                                    scaled[j][neu][col]);
            if (neu != 0) break;
            ++j;
        }
        if (j == k) break; // wrapped all the way: enumeration complete
        ++count;
        size_t wt = 0;
        for (size_t col = 0; col < n; ++col) wt += (word[col] != 0);
        if (wt && wt < best) best = wt;
        if (over && count >= budget) break;
    }
    res.exact = !over;
    res.distance = best;
    res.enumerated = count;
    require(best <= n, "min_distance: no nonzero word enumerated");
    return res;
}

BoundContext::BoundContext(SpectrumPtr spec) : spec_(std::move(spec)) {
    roots_.resize(spec_->ell());
}

const BoundContext::BlockRoots& BoundContext::roots(size_t i) {
    if (roots_[i]) return *roots_[i];
    const Field* F = spec_->field();
    const Block& blk = spec_->blocks()[i];
    // splitting field degree: lcm of the degrees of this block's factors
    unsigned D = 1;
    for (const FactorInfo& fi : spec_->factors())
        if (fi.eps[i]) D = static_cast<unsigned>(std::lcm<unsigned>(D, fi.degree));
    BlockRoots br;
    br.splitting_field = Field::make(F->characteristic(), F->degree() * D);
    br.emb = std::make_shared<SubfieldMap>(F, br.splitting_field);
    const Field* L = br.splitting_field;
    // canonical primitive m-th root of unity: first element of order m
    bool found_xi = false, found_delta = false;
    const FieldElement lam_up = br.emb->up(blk.lambda);
    for (uint64_t idx = 0; idx < L->order(); ++idx) {
        FieldElement cand = L->from_index(idx);
        if (cand.is_zero()) continue;
        if (!found_xi && L->mult_order(cand) == blk.m) {
            br.xi = cand;
            found_xi = true;
        }
        if (!found_delta && L->pow(cand, blk.m) == lam_up) {
            br.delta = cand;
            found_delta = true;
        }
        if (found_xi && found_delta) break;
    }
    if (blk.m == 1 && !found_xi) {
        br.xi = L->one();
        found_xi = true;
    }
    require(found_xi && found_delta, "bch: root normalization not found in splitting field");
    FieldElement cur = br.delta;
    for (unsigned j = 0; j < blk.m; ++j) {
        br.roots.push_back(cur);
        cur = cur * br.xi;
    }
    roots_[i] = std::move(br);
    return *roots_[i];
}

size_t BoundContext::inner_distance(size_t i, const std::vector<char>& factor_mask,
                                    uint64_t budget) {
    auto key = std::make_pair(i, factor_mask);
    auto it = inner_memo_.find(key);
    if (it != inner_memo_.end()) return it->second;
    const Field* F = spec_->field();
    Poly gen = spec_->block_modulus(i);
    for (size_t w = 0; w < spec_->factor_count(); ++w)
        if (factor_mask[w] && spec_->factor(w).eps[i]) gen = gen / spec_->factor(w).g;
    auto shape = ModuleShape::make(F, {spec_->blocks()[i]});
    MTCode inner(shape, {{gen % shape->block_modulus(0)}});
    DistanceResult r = min_distance_exact(inner, budget);
    require(r.exact, "concat bound: inner-code distance enumeration over budget");
    inner_memo_[key] = r.distance;
    return r.distance;
}

namespace {

size_t max_run_cyclic(const std::vector<char>& zero, bool wrap) {
    const size_t m = zero.size();
    size_t all = 0;
    for (char z : zero) all += (z != 0);
    if (all == m) return m;
    size_t best = 0, cur = 0;
    const size_t limit = wrap ? 2 * m : m;
    for (size_t j = 0; j < limit; ++j) {
        if (zero[j % m]) {
            ++cur;
            best = std::max(best, cur);
        } else {
            cur = 0;
        }
    }
    return std::min(best, m);
}

} // namespace

BchReport bch_bound(const MTCode& c, BoundContext& ctx) {
    const SpectrumPtr& spec = ctx.spectrum();
    require(c.rank() > 0, "bch_bound: the zero code has no distance bound");
    BchReport rep;
    size_t ell = c.ell();
    rep.runs_cyclic.resize(ell);
    rep.runs_linear.resize(ell);
    size_t bound = c.length() + 1;
    for (size_t i = 0; i < ell; ++i) {
        const Block& blk = spec->blocks()[i];
        Poly wi = c.project_block(i);
        std::vector<char> zero(blk.m, 0);
        if (wi.degree() == static_cast<int>(blk.m)) {
            std::fill(zero.begin(), zero.end(), 1); // zero projection
        } else {
            const auto& br = ctx.roots(i);
            for (unsigned j = 0; j < blk.m; ++j)
                zero[j] = wi.eval_ext(br.roots[j], *br.emb).is_zero();
        }
        rep.runs_cyclic[i] = max_run_cyclic(zero, true);
        rep.runs_linear[i] = max_run_cyclic(zero, false);
        bound = std::min(bound, rep.runs_cyclic[i] + 1);
    }
    rep.bound = bound;
    return rep;
}

BchReport bch_bound(const MTCode& c) {
    BoundContext ctx(c.spectrum());
    return bch_bound(c, ctx);
}

ConcatBoundReport concat_bound(const MTCode& c, BoundContext& ctx, uint64_t budget) {
    const SpectrumPtr& spec = ctx.spectrum();
    require(c.rank() > 0, "concat_bound: the zero code has no distance bound");
    const auto& cons = c.constituents();

    // nonzero constituents and their exact distances
    std::vector<char> mask(spec->factor_count(), 0);
    std::vector<size_t> dists;
    for (size_t w = 0; w < cons.size(); ++w) {
        if (cons[w].dim() == 0) continue;
        mask[w] = 1;
        // distance of the length-ℓ code over F_w by direct enumeration
        const Field* Fw = cons[w].field;
        const FieldOps& ops = Fw->ops();
        const uint64_t q = Fw->order();
        const size_t kw = cons[w].dim();
        uint64_t total = 1;
        for (size_t t = 0; t < kw; ++t) {
            require(total <= budget / q, "concat_bound: constituent enumeration over budget");
            total *= q;
        }
        size_t best = spec->ell() + 1;
        std::vector<uint32_t> digits(kw, 0), word(spec->ell(), 0);
        while (true) {
            size_t j = 0;
            while (j < kw) {
                const uint32_t old = digits[j];
                const uint32_t neu = (old + 1 == q) ? 0 : old + 1;
                digits[j] = neu;
                for (size_t col = 0; col < spec->ell(); ++col) {
                    uint32_t delta = ops.sub(ops.mul(neu, cons[w].basis.rows[j][col]),
                                             ops.mul(old, cons[w].basis.rows[j][col]));
                    word[col] = ops.add(word[col], delta);
                }
                if (neu != 0) break;
                ++j;
            }
            if (j == kw) break;
            size_t wt = 0;
            for (uint32_t v : word) wt += (v != 0);
            if (wt && wt < best) best = wt;
        }
        dists.push_back(best);
    }
    require(!dists.empty(), "concat_bound: no nonzero constituent");
    std::sort(dists.begin(), dists.end());

    // live blocks and their inner-code distances
    std::vector<size_t> inner;
    for (size_t i = 0; i < spec->ell(); ++i) {
        bool live = false;
        for (size_t w = 0; w < mask.size(); ++w)
            if (mask[w] && spec->factor(w).eps[i]) live = true;
        if (live) inner.push_back(ctx.inner_distance(i, mask, budget));
    }
    std::sort(inner.begin(), inner.end());

    ConcatBoundReport rep;
    rep.constituent_dists = dists;
    rep.inner_dists = inner;
    size_t bound = 0;
    bool bound_set = false;
    for (size_t v = 0; v < dists.size(); ++v) {
        const size_t need = dists[v];
        require(need <= inner.size(), "concat_bound: constituent weight exceeds live blocks");
        size_t kv = std::accumulate(inner.begin(), inner.begin() + static_cast<long>(need),
                                    size_t(0));
        rep.k_values.push_back(kv);
        if (!bound_set || kv < bound) {
            bound = kv;
            bound_set = true;
        }
    }
    rep.bound = bound;
    return rep;
}

ConcatBoundReport concat_bound(const MTCode& c) {
    BoundContext ctx(c.spectrum());
    return concat_bound(c, ctx);
}

DimBoundResult dim_bound_double_twist(const MTCode& c, const std::vector<FieldElement>& omega) {
    DimBoundResult out;
    require(omega.size() == c.ell(), "dim bound: omega arity mismatch");
    const Field* F = c.field();
    std::vector<Block> oblocks;
    bool same_twists = true;
    for (size_t i = 0; i < c.ell(); ++i) {
        require(omega[i].field_ptr() == F && !omega[i].is_zero(),
                "dim bound: omega entries must be nonzero base-field elements");
        oblocks.push_back({c.shape()->blocks()[i].m, omega[i]});
        if (!(omega[i] == c.shape()->blocks()[i].lambda)) same_twists = false;
    }
    require(!same_twists, "dim bound: omega equals the code's twist vector");
    auto oshape = ModuleShape::make(F, oblocks);

    // verify T_Ω-invariance of the row space
    const FqMat& span = c.span_matrix();
    std::vector<uint32_t> shifted;
    for (size_t r = 0; r < span.nrows(); ++r) {
        lambda_shift_row(*oshape, span.rows[r], shifted);
        std::vector<uint32_t> probe = shifted;
        if (!reduce_row(span, c.span_pivots(), probe)) {
            out.reason = "code is not invariant under the second twist";
            return out;
        }
    }

    size_t best = 0;
    for (size_t i = 0; i < c.ell(); ++i) {
        if (omega[i] == c.shape()->blocks()[i].lambda) continue;
        Poly wi = c.project_block(i);
        if (wi.degree() == static_cast<int>(c.shape()->blocks()[i].m)) continue; // zero projection
        best = std::max<size_t>(best, c.shape()->blocks()[i].m);
    }
    if (best == 0) {
        out.reason = "no block has both a twist difference and a nonzero projection";
        return out;
    }
    out.applicable = true;
    out.bound = best;
    return out;
}

} // namespace mtx
