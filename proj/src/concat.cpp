#include "mtx/concat.hpp"

namespace mtx {

namespace {

// Bezout: returns (u, v) with u*a + v*b = gcd(a, b) monic.
std::pair<Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
    const Field* F = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(F), u1 = Poly(F);
    Poly v0 = Poly(F), v1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = r1;
        r1 = r;
        Poly nu = u0 - q * u1, nv = v0 - q * v1;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    // normalize to monic gcd
    FieldElement lead = r0.lead();
    FieldElement inv = F->inv(lead);
    return {u0 * inv, v0 * inv};
}

} // namespace

ConcatContext::ConcatContext(SpectrumPtr spec) : spec_(std::move(spec)) {
    shape_ = ModuleShape::make(spec_->field(), spec_->blocks());
    const Field* F = spec_->field();
    const size_t r = spec_->factor_count();
    const size_t ell = spec_->ell();
    theta_.assign(r, std::vector<Poly>(ell));
    psi_basis_.resize(r);
    for (size_t w = 0; w < r; ++w) {
        const FactorInfo& fi = spec_->factor(w);
        const Field* Fw = fi.constituent_field;
        const SubfieldMap& emb = spec_->embedding(w);
        psi_basis_[w].resize(ell);
        for (size_t i = 0; i < ell; ++i) {
            if (!fi.eps[i]) continue;
            const Poly mod = spec_->block_modulus(i);
            const Poly cof = mod / fi.g;
            auto [u, v] = ext_gcd(fi.g, cof);
            require((u * fi.g + v * cof).is_one(), "idempotent: factors not coprime");
            theta_[w][i] = (v * cof) % mod;

            // ψ basis images: ψ_{w,i}(α_w^j) for j < d_w
            const unsigned m = spec_->blocks()[i].m;
            const FieldElement inv_m = F->inv(F->from_int(m));
            const FieldElement alpha_inv = Fw->inv(fi.alpha);
            psi_basis_[w][i].resize(fi.degree);
            for (unsigned j = 0; j < fi.degree; ++j) {
                FieldElement gamma = Fw->pow(fi.alpha, j);
                std::vector<uint32_t> row(m);
                FieldElement cur = gamma;
                for (unsigned t = 0; t < m; ++t) {
                    FieldElement tr = emb.trace(cur) * inv_m;
                    row[t] = static_cast<uint32_t>(F->index_of(tr));
                    cur = cur * alpha_inv;
                }
                psi_basis_[w][i][j] = std::move(row);
            }
        }
    }
}

const Poly& ConcatContext::idempotent(size_t w, size_t i) const {
    require(spec_->factor(w).eps[i] == 1, "idempotent: ε_{w,i} = 0 for this block");
    return theta_[w][i];
}

Poly ConcatContext::idempotent_or_zero(size_t w, size_t i) const {
    if (!spec_->factor(w).eps[i]) return Poly(spec_->field());
    return theta_[w][i];
}

Codeword ConcatContext::idempotent_word(size_t w) const {
    std::vector<Poly> blocks;
    for (size_t i = 0; i < spec_->ell(); ++i) blocks.push_back(idempotent_or_zero(w, i));
    return Codeword::from_polys(shape_, blocks);
}

FieldElement ConcatContext::phi(size_t w, size_t i, const Poly& a) const {
    const FactorInfo& fi = spec_->factor(w);
    require(fi.eps[i] == 1, "phi: ε_{w,i} = 0 for this block");
    const Poly cof = spec_->block_modulus(i) / fi.g;
    require(cof.divides(a), "phi: polynomial not in the minimal ideal <Θ_{w,i}>");
    return a.eval_ext(fi.alpha, spec_->embedding(w));
}

void ConcatContext::psi_row(size_t w, size_t i, const FieldElement& gamma,
                            std::vector<uint32_t>& out) const {
    const FactorInfo& fi = spec_->factor(w);
    require(fi.eps[i] == 1, "psi: ε_{w,i} = 0 for this block");
    const Field* F = spec_->field();
    const FieldOps& ops = F->ops();
    const unsigned m = spec_->blocks()[i].m;
    std::vector<FieldElement> coords = spec_->power_basis(w).coords(gamma);
    out.assign(m, 0);
    for (unsigned j = 0; j < fi.degree; ++j) {
        const uint32_t c = static_cast<uint32_t>(F->index_of(coords[j]));
        if (!c) continue;
        const auto& base = psi_basis_[w][i][j];
        for (unsigned t = 0; t < m; ++t) out[t] = ops.add(out[t], ops.mul(c, base[t]));
    }
}

Poly ConcatContext::psi(size_t w, size_t i, const FieldElement& gamma) const {
    std::vector<uint32_t> row;
    psi_row(w, i, gamma, row);
    std::vector<FieldElement> cs;
    cs.reserve(row.size());
    for (uint32_t v : row) cs.push_back(spec_->field()->from_index(v));
    return Poly(spec_->field(), std::move(cs));
}

FqMat concat_code(const ConcatContext& ctx, size_t w, const ConstituentCode& d) {
    const SpectrumPtr& spec = ctx.spectrum();
    const FactorInfo& fi = spec->factor(w);
    const Field* F = spec->field();
    const Field* Fw = fi.constituent_field;
    const size_t ell = spec->ell();
    require(d.field == Fw, "concat_code: constituent over the wrong field");
    FqMat out(F, ctx.shape()->length());
    std::vector<uint32_t> blockrow;
    for (size_t rix = 0; rix < d.basis.nrows(); ++rix) {
        std::vector<FieldElement> row;
        for (size_t i = 0; i < ell; ++i) {
            FieldElement v = Fw->from_index(d.basis.rows[rix][i]);
            require(fi.eps[i] == 1 || v.is_zero(),
                    "concat_code: constituent not supported on the ε pattern");
            row.push_back(v);
        }
        for (unsigned j = 0; j < fi.degree; ++j) {
            const FieldElement scale = Fw->pow(fi.alpha, j);
            std::vector<uint32_t> flat(ctx.shape()->length(), 0);
            for (size_t i = 0; i < ell; ++i) {
                if (!fi.eps[i] || row[i].is_zero()) continue;
                ctx.psi_row(w, i, row[i] * scale, blockrow);
                std::copy(blockrow.begin(), blockrow.end(),
                          flat.begin() + static_cast<long>(ctx.shape()->offset(i)));
            }
            out.add_row(std::move(flat));
        }
    }
    return out;
}

MTCode build_from_constituents(const ConcatContext& ctx, const std::vector<ConstituentCode>& parts) {
    const SpectrumPtr& spec = ctx.spectrum();
    require(parts.size() == spec->factor_count(),
            "build_from_constituents: need one part per factor");
    FqMat rows(spec->field(), ctx.shape()->length());
    for (size_t w = 0; w < parts.size(); ++w) {
        FqMat piece = concat_code(ctx, w, parts[w]);
        for (auto& r : piece.rows) rows.add_row(std::move(r));
    }
    return MTCode::from_rows(spec, ctx.shape(), rows);
}

MTCode build_from_constituents(const SpectrumPtr& spec, const std::vector<ConstituentCode>& parts) {
    ConcatContext ctx(spec);
    return build_from_constituents(ctx, parts);
}

Codeword trace_codeword(const ConcatContext& ctx,
                        const std::vector<std::vector<FieldElement>>& delta) {
    const SpectrumPtr& spec = ctx.spectrum();
    const Field* F = spec->field();
    const FieldOps& ops = F->ops();
    require(delta.size() == spec->factor_count(), "trace_codeword: need one tuple per factor");
    std::vector<uint32_t> flat(ctx.shape()->length(), 0);
    std::vector<uint32_t> blockrow;
    for (size_t w = 0; w < delta.size(); ++w) {
        const FactorInfo& fi = spec->factor(w);
        require(delta[w].size() == spec->ell(), "trace_codeword: tuple arity mismatch");
        for (size_t i = 0; i < spec->ell(); ++i) {
            const FieldElement& dwi = delta[w][i];
            require(dwi.field_ptr() == fi.constituent_field,
                    "trace_codeword: δ component in the wrong constituent field");
            if (dwi.is_zero()) continue;
            require(fi.eps[i] == 1, "trace_codeword: δ not supported on the ε pattern");
            ctx.psi_row(w, i, dwi, blockrow);
            const size_t off = ctx.shape()->offset(i);
            for (size_t t = 0; t < blockrow.size(); ++t)
                flat[off + t] = ops.add(flat[off + t], blockrow[t]);
        }
    }
    return Codeword::from_indices(ctx.shape(), flat);
}

} // namespace mtx
