#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mtx/rng.hpp"

namespace mtx::selftest {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail; // deterministic one-line summary
};

SuiteResult field_suite(uint64_t seed);
SuiteResult poly_suite(uint64_t seed);
SuiteResult spectrum_suite(uint64_t seed);
SuiteResult mtcore_suite(uint64_t seed);
SuiteResult duality_suite(uint64_t seed);
SuiteResult concat_suite(uint64_t seed);
/// The census oracle grid: closed forms vs exhaustive constituent-tuple
/// enumeration with Gaussian-elimination predicates. `full` runs the whole
/// q ∈ {2,3,4,5}, ℓ ∈ {1,2}, m_i ∈ {1..5} grid; otherwise a reduced slice.
SuiteResult census_grid_suite(bool full, std::ostream* progress = nullptr);
SuiteResult census_special_suite();
/// Bound soundness sweep plus the classical cyclic controls.
SuiteResult bounds_suite(uint64_t seed);
/// The two-block trace closed form, checked on random constituent tuples.
SuiteResult trace_example_suite(uint64_t seed, unsigned trials);
SuiteResult lcd_consistency_suite();

/// Run every suite, printing one "suite <name>: PASS/FAIL (detail)" line per
/// suite. Byte-identical output for a fixed seed. Returns overall success.
bool verify(uint64_t seed, std::ostream& out, bool full_grid = true);

} // namespace mtx::selftest
