#pragma once

#include <string>

#include "mtx/code.hpp"

namespace mtx {

/// Standard inner product over all n coordinates. Shapes must agree in
/// block lengths (the twists may differ: one word may live in V').
FieldElement inner_product(const Codeword& a, const Codeword& b);

/// Conjugation into the block ring F_q[x]/(x^m - mu): substitutes the
/// inverse of x there, x^{-1} = mu^{-1} x^{m-1}, and reduces. The natural
/// domain is the ring with the inverted twist, F_q[x]/(x^m - mu^{-1}).
Poly conjugate_into(const Poly& b, unsigned m, const FieldElement& mu);

/// The paper-facing map V_i' -> V_i (b reduced mod x^{m_i} - λ_i^{-1}).
inline Poly conjugate_block(const Poly& b, unsigned m, const FieldElement& lambda) {
    return conjugate_into(b, m, lambda);
}

/// The product form (a, b) in F_q[x]/(x^m - 1) for a in V, b in V';
/// coefficient j equals <a, T_{Λ'}^j(b)>.
Poly form_product(const SpectrumPtr& spec, const Codeword& a, const Codeword& b);

/// Dual code as a Λ'-multi-twisted code: nullspace of the span matrix,
/// re-expressed as generator tuples. dim C + dim C⊥ = n.
MTCode dual_code(const MTCode& c, SpectrumPtr dual_spec = nullptr);

/// Closed-form dual for pairwise coprime block moduli: generated by the
/// blockwise conjugated quotients (x^{m_i}-λ_i)/w_i.
MTCode dual_closed_form(const MTCode& c, SpectrumPtr dual_spec = nullptr);

bool blocks_pairwise_coprime(const ModuleShape& shape);

struct DualityFlags {
    bool is_self_orthogonal = false;
    bool is_self_dual = false;
    bool is_lcd = false;
    bool is_dual_containing = false;
    size_t dim_intersection = 0;
    FqMat intersection; // witness basis of C ∩ C⊥
};

DualityFlags duality_flags(const MTCode& c);
DualityFlags duality_flags(const MTCode& c, const MTCode& dual);

struct SelfDualExistence {
    bool exists = false;
    std::string failed_clause; // empty when exists
};

/// Existence of a self-dual code for this spectrum: no unpaired factors,
/// τ_v >= 1 for every reciprocal pair, ε_u even for every self-reciprocal
/// factor, and (-1)^{ε_u/2} a square for the degree-one ones.
SelfDualExistence self_dual_exists(const Spectrum& spec);

struct LcdVerdict {
    bool applicable = false;      // λ_i != λ_i^{-1} for every block
    bool small_dim = false;       // dim C or dim C⊥ below min m_i -> LCD
    bool dim_eq_so = false;       // dim C = min m_i -> LCD or self-orthogonal
    bool dim_eq_dc = false;       // dim C⊥ = min m_i -> LCD or dual-containing
    bool dim_eq_sd = false;       // both -> LCD or self-dual
    bool proper_projections = false; // every i: π_i(C) != <1> or π_i(C⊥) != <1> -> LCD
    bool lcd_concluded = false;
    /// A rule fired its LCD conclusion but the exact flags refute it. This
    /// can happen on spectra with an unpaired factor spanning several
    /// blocks, where the sufficiency arguments break down; the verdict then
    /// defers to the flags and raises this diagnostic.
    bool rule_contradicted = false;
    std::string route;            // which rule settled it
};

/// Evaluates the sufficiency rules; resolves the either/or alternatives with
/// the computed duality flags, and never contradicts them.
LcdVerdict lcd_sufficient(const MTCode& c);
LcdVerdict lcd_sufficient(const MTCode& c, const MTCode& dual, const DualityFlags& flags);

/// Constituent-level sesquilinear pairing between slot w of the code's
/// spectrum and the matching slot of the dual spectrum (factor g_w*):
/// [x, y] = Σ_i (m/m_i) ε_{w,i} x_i σ(y_i), with σ the field isomorphism
/// sending the dual root to α_w^{-1}.
FieldElement constituent_pair_form(const Spectrum& spec, const Spectrum& dual_spec, size_t w,
                                   const std::vector<FieldElement>& x,
                                   const std::vector<FieldElement>& y);

/// Index in the dual spectrum of the slot paired with factor w.
size_t dual_slot_index(const Spectrum& spec, const Spectrum& dual_spec, size_t w);

/// Expected constituent of the dual code at the slot paired with w: the
/// orthogonal complement of C_w under the pairing above.
ConstituentCode expected_dual_constituent(const Spectrum& spec, const Spectrum& dual_spec,
                                          size_t w, const ConstituentCode& cw);

} // namespace mtx
