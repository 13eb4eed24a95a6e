#include "mtx/duality.hpp"

#include <algorithm>

namespace mtx {

FieldElement inner_product(const Codeword& a, const Codeword& b) {
    const ModuleShape& sa = *a.shape();
    const ModuleShape& sb = *b.shape();
    require(sa.field() == sb.field() && sa.ell() == sb.ell(), "inner_product: shape mismatch");
    for (size_t i = 0; i < sa.ell(); ++i)
        require(sa.blocks()[i].m == sb.blocks()[i].m, "inner_product: block length mismatch");
    FieldElement acc = sa.field()->zero();
    for (size_t j = 0; j < a.flat().size(); ++j) acc = acc + a.flat()[j] * b.flat()[j];
    return acc;
}

Poly conjugate_into(const Poly& b, unsigned m, const FieldElement& mu) {
    const Field* F = b.field();
    require(!mu.is_zero(), "conjugate: twist must be nonzero");
    require(b.degree() < static_cast<int>(m), "conjugate: input not reduced");
    const Poly mod = Poly::binomial(F, m, mu);
    // x^{-1} in the target ring
    std::vector<FieldElement> xi(m, F->zero());
    if (m == 1) {
        xi[0] = F->inv(mu);
    } else {
        xi[m - 1] = F->inv(mu);
    }
    const Poly xinv(F, std::move(xi));
    Poly acc = Poly(F), cur = Poly::one(F);
    for (int j = 0; j <= b.degree(); ++j) {
        acc = acc + cur * b.coeff(static_cast<size_t>(j));
        cur = (cur * xinv) % mod;
    }
    return acc % mod;
}

Poly form_product(const SpectrumPtr& spec, const Codeword& a, const Codeword& b) {
    const Field* F = spec->field();
    const ModuleShape& sa = *a.shape();
    require(sa.field() == F && sa.ell() == spec->ell(), "form_product: shape mismatch");
    const uint64_t m = spec->exponent();
    const Poly big = Poly::binomial(F, static_cast<unsigned>(m), F->one());
    Poly acc(F);
    for (size_t i = 0; i < spec->ell(); ++i) {
        const Block& blk = spec->blocks()[i];
        require(b.shape()->blocks()[i].m == blk.m, "form_product: block length mismatch");
        Poly bi = conjugate_block(b.block_poly(i), blk.m, blk.lambda);
        Poly prod = (a.block_poly(i) * bi) % spec->block_modulus(i);
        Poly cof = big / spec->block_modulus(i);
        acc = (acc + prod * cof * blk.lambda) % big;
    }
    return acc % big;
}

MTCode dual_code(const MTCode& c, SpectrumPtr dual_spec) {
    FqMat ns = nullspace(c.span_matrix());
    if (c.rank() == 0) {
        // nullspace of an empty matrix: the whole space
        ns = FqMat(c.field(), c.length());
        for (size_t j = 0; j < c.length(); ++j) {
            std::vector<uint32_t> row(c.length(), 0);
            row[j] = 1;
            ns.add_row(std::move(row));
        }
    }
    rref(ns);
    ShapePtr dshape = c.shape()->dual_shape();
    if (dual_spec) return MTCode::from_rows(std::move(dual_spec), dshape, ns);
    return MTCode::from_rows(dshape, ns);
}

bool blocks_pairwise_coprime(const ModuleShape& shape) {
    for (size_t i = 0; i < shape.ell(); ++i)
        for (size_t j = i + 1; j < shape.ell(); ++j)
            if (poly_gcd(shape.block_modulus(i), shape.block_modulus(j)).degree() > 0)
                return false;
    return true;
}

MTCode dual_closed_form(const MTCode& c, SpectrumPtr dual_spec) {
    require(blocks_pairwise_coprime(*c.shape()),
            "dual_closed_form: block moduli are not pairwise coprime");
    const Field* F = c.field();
    ShapePtr dshape = c.shape()->dual_shape();
    std::vector<std::vector<Poly>> gens;
    for (size_t i = 0; i < c.ell(); ++i) {
        const Block& blk = c.shape()->blocks()[i];
        Poly wi = c.project_block(i);
        Poly hi = (c.shape()->block_modulus(i) / wi) % c.shape()->block_modulus(i);
        Poly hbar = hi.is_zero() ? Poly(F) : conjugate_into(hi, blk.m, F->inv(blk.lambda));
        std::vector<Poly> tuple(c.ell(), Poly(F));
        tuple[i] = hbar;
        gens.push_back(std::move(tuple));
    }
    if (dual_spec) return MTCode(std::move(dual_spec), dshape, std::move(gens));
    return MTCode(dshape, std::move(gens));
}

DualityFlags duality_flags(const MTCode& c) {
    MTCode d = dual_code(c);
    return duality_flags(c, d);
}

DualityFlags duality_flags(const MTCode& c, const MTCode& dual) {
    DualityFlags fl;
    fl.intersection = row_intersection(c.span_matrix(), dual.span_matrix());
    fl.dim_intersection = fl.intersection.nrows();
    const size_t dc = c.rank(), dd = dual.rank();
    fl.is_self_orthogonal = (fl.dim_intersection == dc);
    fl.is_dual_containing = (fl.dim_intersection == dd);
    fl.is_self_dual = fl.is_self_orthogonal && dc == dd;
    fl.is_lcd = (fl.dim_intersection == 0);
    return fl;
}

// self_dual_exists is defined in census.cpp next to the counting geometry.

LcdVerdict lcd_sufficient(const MTCode& c) {
    MTCode d = dual_code(c);
    return lcd_sufficient(c, d, duality_flags(c, d));
}

LcdVerdict lcd_sufficient(const MTCode& c, const MTCode& dual, const DualityFlags& flags) {
    LcdVerdict v;
    const Field* F = c.field();
    for (const Block& b : c.shape()->blocks())
        if (b.lambda == F->inv(b.lambda)) return v; // not applicable
    v.applicable = true;

    size_t minm = c.shape()->blocks()[0].m;
    for (const Block& b : c.shape()->blocks()) minm = std::min<size_t>(minm, b.m);
    const size_t dimc = c.rank(), dimd = dual.rank();

    // A rule "fires" when its hypothesis holds and its alternatives (if any)
    // are ruled out by the exact flags; the conclusion is accepted only when
    // the flags agree, otherwise the contradiction diagnostic is raised.
    auto conclude = [&](const char* route) {
        if (flags.is_lcd) {
            if (!v.lcd_concluded) {
                v.lcd_concluded = true;
                v.route = route;
            }
        } else {
            v.rule_contradicted = true;
        }
    };

    if (dimc < minm || dimd < minm) {
        v.small_dim = true;
        conclude("dimension below smallest block length");
    }
    if (dimc == minm && dimd == minm) {
        v.dim_eq_sd = true;
        if (!flags.is_self_dual) conclude("dim C = dim dual = min m_i and C != dual");
    }
    if (dimc == minm) {
        v.dim_eq_so = true;
        if (!flags.is_self_orthogonal) conclude("dim C = min m_i and C not self-orthogonal");
    }
    if (dimd == minm) {
        v.dim_eq_dc = true;
        if (!flags.is_dual_containing) conclude("dim dual = min m_i and C not dual-containing");
    }
    bool proper = true;
    for (size_t i = 0; i < c.ell() && proper; ++i) {
        const bool proj_c_full = c.project_block(i).is_one();
        const bool proj_d_full = dual.project_block(i).is_one();
        if (proj_c_full && proj_d_full) proper = false;
    }
    if (proper) {
        v.proper_projections = true;
        conclude("no block projects onto the whole ring on both sides");
    }
    return v;
}

size_t dual_slot_index(const Spectrum& spec, const Spectrum& dual_spec, size_t w) {
    const Poly gstar = reciprocal(spec.factor(w).g);
    int idx = dual_spec.index_of_poly(gstar);
    require(idx >= 0, "dual spectrum does not contain the reciprocal factor");
    return static_cast<size_t>(idx);
}

namespace {

// sigma: F(dual slot) -> F(primal slot), dual root |-> alpha_w^{-1}
FieldElement sigma_map(const Spectrum& spec, const Spectrum& dual_spec, size_t w, size_t wd,
                       const FieldElement& y) {
    const FactorInfo& fp = spec.factor(w);
    const Field* Fw = fp.constituent_field;
    auto coords = dual_spec.power_basis(wd).coords(y);
    return spec.power_basis(w).eval_at(coords, Fw->inv(fp.alpha));
}

// sigma^{-1}: F(primal) -> F(dual), alpha_w |-> (dual root)^{-1}
FieldElement sigma_inv_map(const Spectrum& spec, const Spectrum& dual_spec, size_t w, size_t wd,
                           const FieldElement& z) {
    const FactorInfo& fd = dual_spec.factor(wd);
    auto coords = spec.power_basis(w).coords(z);
    return dual_spec.power_basis(wd).eval_at(coords, fd.constituent_field->inv(fd.alpha));
}

} // namespace

FieldElement constituent_pair_form(const Spectrum& spec, const Spectrum& dual_spec, size_t w,
                                   const std::vector<FieldElement>& x,
                                   const std::vector<FieldElement>& y) {
    const size_t wd = dual_slot_index(spec, dual_spec, w);
    const FactorInfo& fp = spec.factor(w);
    const Field* Fw = fp.constituent_field;
    const SubfieldMap& emb = spec.embedding(w);
    FieldElement acc = Fw->zero();
    for (size_t i = 0; i < spec.ell(); ++i) {
        if (!fp.eps[i]) continue;
        FieldElement scalar = emb.up(spec.m_over_mi(i));
        acc = acc + scalar * x[i] * sigma_map(spec, dual_spec, w, wd, y[i]);
    }
    return acc;
}

ConstituentCode expected_dual_constituent(const Spectrum& spec, const Spectrum& dual_spec,
                                          size_t w, const ConstituentCode& cw) {
    const size_t wd = dual_slot_index(spec, dual_spec, w);
    const FactorInfo& fp = spec.factor(w);
    const FactorInfo& fd = dual_spec.factor(wd);
    const Field* Fw = fp.constituent_field;
    const size_t ell = spec.ell();

    // unknowns z_i = sigma(y_i) on the support of ε_w; constraints from the
    // basis rows of C_w: Σ_i s_i x_i z_i = 0
    std::vector<size_t> sup;
    for (size_t i = 0; i < ell; ++i)
        if (fp.eps[i]) sup.push_back(i);
    FqMat sys(Fw, sup.size());
    const SubfieldMap& emb = spec.embedding(w);
    for (size_t r = 0; r < cw.basis.nrows(); ++r) {
        std::vector<uint32_t> row(sup.size(), 0);
        for (size_t si = 0; si < sup.size(); ++si) {
            FieldElement xi = Fw->from_index(cw.basis.rows[r][sup[si]]);
            FieldElement coeff = emb.up(spec.m_over_mi(sup[si])) * xi;
            row[si] = static_cast<uint32_t>(Fw->index_of(coeff));
        }
        sys.add_row(std::move(row));
    }
    FqMat zbasis = nullspace(sys);

    ConstituentCode out;
    out.w = wd;
    out.field = fd.constituent_field;
    out.basis = FqMat(fd.constituent_field, ell);
    for (size_t r = 0; r < zbasis.nrows(); ++r) {
        std::vector<uint32_t> row(ell, 0);
        for (size_t si = 0; si < sup.size(); ++si) {
            FieldElement z = Fw->from_index(zbasis.rows[r][si]);
            FieldElement y = sigma_inv_map(spec, dual_spec, w, wd, z);
            row[sup[si]] = static_cast<uint32_t>(fd.constituent_field->index_of(y));
        }
        out.basis.add_row(std::move(row));
    }
    rref(out.basis);
    return out;
}

} // namespace mtx
