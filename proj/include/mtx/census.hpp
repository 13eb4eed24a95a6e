#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtx/bigint.hpp"
#include "mtx/duality.hpp"
#include "mtx/spectrum.hpp"

namespace mtx {

/// [k choose b]_Q: number of b-dimensional subspaces of F_Q^k,
/// as the exact product Π_{d=0}^{b-1} (Q^k - Q^d)/(Q^b - Q^d).
/// Returns 0 for b > k.
BigUint q_binomial(unsigned k, unsigned b, const BigUint& Q);

/// N(k,Q): total number of subspaces of F_Q^k.
BigUint num_subspaces(unsigned k, const BigUint& Q);

struct FactorCensusRow {
    size_t w = 0;
    FactorClass cls = FactorClass::unpaired;
    unsigned eps = 0;
    unsigned tau = 0;
    unsigned degree = 0;
    BigUint n_choices;                 // N(ε_w, q^{d_w}) factor of N_Λ
    std::optional<BigUint> d_count;    // 𝔇 factor of the self-dual count
    std::optional<BigUint> e_count;    // 𝔈 factor of the self-orthogonal count
    std::string case_tag;              // which geometry case supplied the formula
};

struct CensusReport {
    std::vector<FactorCensusRow> rows;
    BigUint total;                 // N_Λ
    SelfDualExistence existence;
    BigUint self_dual;             // 𝔑₀ (0 when none exists)
    BigUint self_orthogonal;       // 𝔑₁
    /// An unpaired factor supported on several blocks makes its slot pair
    /// with itself under the inner product. For two supported blocks the
    /// census resolves this exactly (isotropic-line analysis); such slots
    /// are reported here because some structural shortcuts (e.g. the LCD
    /// sufficiency rules) are unsound on them.
    bool self_pairing_slots = false;
    /// An unpaired factor on three or more blocks: outside the implemented
    /// closed-form analysis; counts fall back to treating the slot as
    /// zero-only and may undercount.
    bool beyond_closed_form = false;
};

/// Total number of distinct multi-twisted codes: Π_w N(ε_w, q^{d_w}).
BigUint count_all(const Spectrum& spec);
/// Number of self-dual codes by the closed form; 0 when existence fails.
BigUint count_self_dual(const Spectrum& spec);
/// Number of self-orthogonal codes by the closed form.
BigUint count_self_orthogonal(const Spectrum& spec);

CensusReport census(const Spectrum& spec);

} // namespace mtx
