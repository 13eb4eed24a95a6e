#pragma once

#include <functional>
#include <vector>

#include "mtx/field.hpp"

namespace mtx {

/// Dense matrix over a Field with entries stored as canonical element
/// indices. This is the workhorse representation for span matrices,
/// nullspaces and the exhaustive sweeps; FieldElement objects are converted
/// at the boundaries.
struct FqMat {
    const Field* f = nullptr;
    size_t cols = 0;
    std::vector<std::vector<uint32_t>> rows;

    FqMat() = default;
    FqMat(const Field* field, size_t ncols) : f(field), cols(ncols) {}

    size_t nrows() const { return rows.size(); }
    void add_row(std::vector<uint32_t> r) { rows.push_back(std::move(r)); }

    std::vector<FieldElement> row_elems(size_t i) const;
    static std::vector<uint32_t> to_indices(const Field* f, const std::vector<FieldElement>& v);
};

/// In-place reduced row echelon form; drops zero rows; returns rank.
size_t rref(FqMat& m, std::vector<size_t>* pivot_cols = nullptr);

/// Reduce a row against an RREF matrix. Returns true if it reduces to zero,
/// i.e. the row lies in the row space.
bool reduce_row(const FqMat& rref_m, const std::vector<size_t>& pivots,
                std::vector<uint32_t>& row);

size_t rank_of(FqMat m);

/// Basis of { y : <r, y> = 0 for every row r } as rows of the result.
FqMat nullspace(const FqMat& m);

/// Row-space intersection basis (Zassenhaus).
FqMat row_intersection(const FqMat& a, const FqMat& b);

bool same_rowspace(FqMat a, FqMat b);
bool rowspace_contains(FqMat space, const std::vector<uint32_t>& row);

/// Inner product sum_i a_i b_i as an element index.
uint32_t dot(const Field* f, const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

/// Canonical byte signature of a row space (RREF flattened), for dedup sets.
std::string rowspace_signature(FqMat m);

/// Visit every subspace of F^ncols exactly once (as an RREF row basis,
/// the zero subspace as an empty matrix). Used by the exhaustive census
/// oracles; keep ncols small.
void enumerate_subspaces(const Field* f, size_t ncols,
                         const std::function<void(const FqMat&)>& visit);

/// Visit every subspace supported on the given coordinate mask.
void enumerate_subspaces_masked(const Field* f, size_t ncols, const std::vector<int>& mask,
                                const std::function<void(const FqMat&)>& visit);

} // namespace mtx
