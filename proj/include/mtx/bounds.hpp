#pragma once

#include <map>
#include <optional>

#include "mtx/code.hpp"

namespace mtx {

struct DistanceResult {
    bool exact = false;
    size_t distance = 0;  // exact minimum weight, or the best upper bound found
    uint64_t enumerated = 0;
};

/// Minimum Hamming weight by enumerating the row space of the span matrix.
/// When q^rank exceeds the budget the enumeration stops early and the result
/// is only an upper bound (exact = false). The zero code is an error.
DistanceResult min_distance_exact(const MTCode& c, uint64_t budget = uint64_t(1) << 24);

/// Per-spectrum caches used by the bounds: canonical block root tables
/// (δ_i, ξ_i) in the splitting fields, and a memo of inner-code distances
/// for the concatenation bound.
class BoundContext {
public:
    explicit BoundContext(SpectrumPtr spec);

    struct BlockRoots {
        const Field* splitting_field = nullptr;
        std::shared_ptr<SubfieldMap> emb;
        FieldElement xi;                  // canonical primitive m_i-th root of unity
        FieldElement delta;               // canonical m_i-th root of λ_i
        std::vector<FieldElement> roots;  // δ ξ^j for j = 0..m_i-1
    };
    const BlockRoots& roots(size_t i);

    /// Exact minimum distance of the constacyclic inner code of block i
    /// generated by (x^{m_i}-λ_i)/Π g_w over the participating factors.
    size_t inner_distance(size_t i, const std::vector<char>& factor_mask, uint64_t budget);

    const SpectrumPtr& spectrum() const { return spec_; }

private:
    SpectrumPtr spec_;
    std::vector<std::optional<BlockRoots>> roots_;
    std::map<std::pair<size_t, std::vector<char>>, size_t> inner_memo_;
};

struct BchReport {
    size_t bound = 0;                  // min_i (b_i + 1)
    std::vector<size_t> runs_cyclic;   // b_i with cyclic wraparound
    std::vector<size_t> runs_linear;   // b_i without wraparound, for transparency
};

/// BCH-type bound: per block, the longest run of consecutive exponents j
/// (cyclically mod m_i) such that δ_i ξ_i^j is a zero of w_i(x).
BchReport bch_bound(const MTCode& c, BoundContext& ctx);
BchReport bch_bound(const MTCode& c);

struct ConcatBoundReport {
    size_t bound = 0;
    std::vector<size_t> constituent_dists; // 𝔡_j ascending over nonzero constituents
    std::vector<size_t> k_values;          // 𝔎_v per sorted constituent
    std::vector<size_t> inner_dists;       // per live block, ascending
};

/// Concatenation bound from the multilevel structure; +∞ blocks (no
/// participating factor) are excluded from the index sets.
ConcatBoundReport concat_bound(const MTCode& c, BoundContext& ctx,
                               uint64_t budget = uint64_t(1) << 24);
ConcatBoundReport concat_bound(const MTCode& c);

struct DimBoundResult {
    bool applicable = false;
    size_t bound = 0;
    std::string reason;
};

/// Dimension lower bound for a code that is multi-twisted for two different
/// twist vectors: max m_i over blocks where the twists differ and the
/// projection is nonzero. Verifies that the row space really is invariant
/// under the Ω-shift.
DimBoundResult dim_bound_double_twist(const MTCode& c, const std::vector<FieldElement>& omega);

} // namespace mtx
