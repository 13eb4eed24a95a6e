#pragma once

#include "mtx/code.hpp"

namespace mtx {

/// Per-spectrum tables for the concatenated view of V: generating
/// idempotents of the minimal block ideals and the component isomorphisms
/// phi/psi between those ideals and the constituent fields. Build once per
/// spectrum and share; everything here is immutable after construction.
class ConcatContext {
public:
    explicit ConcatContext(SpectrumPtr spec);

    const SpectrumPtr& spectrum() const { return spec_; }
    const ShapePtr& shape() const { return shape_; }

    /// Generating idempotent of <(x^{m_i}-λ_i)/g_w> in block i; requires
    /// ε_{w,i} = 1.
    const Poly& idempotent(size_t w, size_t i) const;
    /// The zero-incidence convention: zero polynomial when ε_{w,i} = 0.
    Poly idempotent_or_zero(size_t w, size_t i) const;
    /// The tuple Θ_w as a codeword.
    Codeword idempotent_word(size_t w) const;

    /// phi_{w,i}: evaluation at α_w; requires ε_{w,i}=1 and a ∈ <Θ_{w,i}>.
    FieldElement phi(size_t w, size_t i, const Poly& a) const;
    /// psi_{w,i}: the inverse map, (1/m_i)(Tr(γ α_w^{-j}))_j as a block poly.
    Poly psi(size_t w, size_t i, const FieldElement& gamma) const;

    /// Index row of ψ_{w,i}(γ) over F_q (length m_i), via the cached basis
    /// images; the fast path for sweeps.
    void psi_row(size_t w, size_t i, const FieldElement& gamma, std::vector<uint32_t>& out) const;

private:
    SpectrumPtr spec_;
    ShapePtr shape_;
    // theta_[w][i]: idempotent when eps=1
    std::vector<std::vector<Poly>> theta_;
    // psi_basis_[w][i][j]: indices of ψ_{w,i}(α_w^j), j < d_w
    std::vector<std::vector<std::vector<std::vector<uint32_t>>>> psi_basis_;
};

/// The concatenation <Θ_w> □ D for a constituent code D over F_w supported
/// on ε_w: returns an F_q generator matrix (one row per F_q-basis vector of D).
FqMat concat_code(const ConcatContext& ctx, size_t w, const ConstituentCode& d);

/// Build the multi-twisted code ⊕_w <Θ_w> □ parts_w; constituents round-trip.
MTCode build_from_constituents(const ConcatContext& ctx, const std::vector<ConstituentCode>& parts);
/// Convenience overload that builds the context on the fly.
MTCode build_from_constituents(const SpectrumPtr& spec, const std::vector<ConstituentCode>& parts);

/// Trace description of a single codeword from one constituent tuple
/// δ_w ∈ C_w: block i = (1/m_i)(Σ_w Tr(δ_{w,i} α_w^{-j}))_j.
Codeword trace_codeword(const ConcatContext& ctx,
                        const std::vector<std::vector<FieldElement>>& delta);

} // namespace mtx
