#pragma once

#include <functional>

#include "mtx/census.hpp"
#include "mtx/concat.hpp"

namespace mtx {

/// Code-level predicates decided by Gaussian elimination on the span matrix,
/// independent of the counting formulas: the oracle side of the census.
struct CodePredicates {
    size_t dim = 0;
    bool self_orthogonal = false;
    bool self_dual = false;
    bool lcd = false; // only filled when requested
};

CodePredicates eval_predicates(const MTCode& code, bool need_lcd);

/// Visit every multi-twisted code of the spectrum exactly once, as a tuple
/// of constituent subspaces plus the code it concatenates to.
void sweep_all_codes(const SpectrumPtr& spec,
                     const std::function<void(const std::vector<ConstituentCode>&,
                                              const MTCode&)>& visit);

/// Number of tuples the sweep will visit (equals count_all when the
/// constituent decomposition is injective, which the oracle checks).
BigUint sweep_size(const Spectrum& spec);

} // namespace mtx
