#pragma once

#include <memory>
#include <vector>

#include "mtx/poly.hpp"

namespace mtx {

/// One block of a multi-twisted module: coordinates F_q[x]/(x^m - lambda).
struct Block {
    unsigned m;
    FieldElement lambda;
};

enum class FactorClass { self_reciprocal, pair_lead, pair_partner, unpaired };

/// One distinct monic irreducible factor g_w of the system, with its
/// incidence rows, classification and constituent-field data.
struct FactorInfo {
    Poly g;
    unsigned degree = 0;                 // d_w
    FactorClass cls = FactorClass::unpaired;
    int partner = -1;                    // flat index of the reciprocal mate
    std::vector<int> eps;                // ε_{w,i}: g_w | x^{m_i} - λ_i
    std::vector<int> eps_dual;           // ε'_{w,i}: g_w* | x^{m_i} - λ_i
    unsigned eps_sum = 0;                // ε_w
    unsigned eps_dual_sum = 0;           // ε'_w
    unsigned tau = 0;                    // Σ_i ε_{w,i} ε'_{w,i}
    const Field* constituent_field = nullptr; // F_w = F_{q^{d_w}}
    FieldElement alpha;                  // canonical root of g_w in F_w
};

/// The global factor spectrum of (x^{m_1}-λ_1, ..., x^{m_ℓ}-λ_ℓ): all
/// distinct irreducible factors in canonical order (self-reciprocal, pair
/// leads, unpaired, then pair partners; degree-then-lex within each class),
/// with incidence and pairing data. Immutable once built.
class Spectrum {
public:
    static std::shared_ptr<const Spectrum> build(const Field* field, std::vector<Block> blocks,
                                                 const FactorOptions& opt = {});

    const Field* field() const { return field_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    size_t ell() const { return blocks_.size(); }
    size_t length() const { return n_; }

    const std::vector<FactorInfo>& factors() const { return factors_; }
    size_t factor_count() const { return factors_.size(); } // r
    const FactorInfo& factor(size_t w) const { return factors_[w]; }

    /// Class boundaries in the flat list (0-based): factors [0,s) are
    /// self-reciprocal, [s,t) pair leads, [t,e) unpaired, [e,r) partners.
    size_t s() const { return s_; }
    size_t t() const { return t_; }
    size_t e() const { return e_; }

    /// m = lcm[m_i O(λ_i)]; the order of the multi-twisted shift.
    uint64_t exponent() const { return exponent_; }

    /// Embedding F_q -> F_w for factor w (shared per constituent field).
    const SubfieldMap& embedding(size_t w) const;
    /// Coordinates in the power basis {α_w^j : j < d_w} over F_q.
    const PowerBasis& power_basis(size_t w) const;

    /// x^{m_i} - λ_i as a Poly.
    Poly block_modulus(size_t i) const;
    /// (m/m_i) as an element of F_q.
    FieldElement m_over_mi(size_t i) const;
    /// Diagnostic: true when some m/m_i reduces to zero mod p.
    bool m_over_mi_vanishes() const { return m_over_mi_vanishes_; }

    /// Flat index of the factor whose polynomial equals g (monic); -1 if absent.
    int index_of_poly(const Poly& g) const;

private:
    Spectrum() = default;

    const Field* field_ = nullptr;
    std::vector<Block> blocks_;
    size_t n_ = 0;
    std::vector<FactorInfo> factors_;
    size_t s_ = 0, t_ = 0, e_ = 0;
    uint64_t exponent_ = 1;
    bool m_over_mi_vanishes_ = false;
    std::vector<std::shared_ptr<SubfieldMap>> embeddings_;  // per factor
    std::vector<std::shared_ptr<PowerBasis>> power_bases_;  // per factor
};

using SpectrumPtr = std::shared_ptr<const Spectrum>;

} // namespace mtx
