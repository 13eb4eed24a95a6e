#pragma once

#include <cstdint>
#include <string>

#include "mtx/bounds.hpp"
#include "mtx/census.hpp"
#include "mtx/code.hpp"
#include "mtx/concat.hpp"
#include "mtx/duality.hpp"

namespace mtx {

/// Parse the line-oriented code-specification format:
///   field <p> <k> [modulus-digits-comma-separated]
///   block <m_i> <lambda-encoding>       (one per block, in order)
///   gen <poly-encoding> | <poly-encoding> | ...
/// '#' starts a comment; blank lines ignored. Errors carry line numbers.
MTCode parse_code_text(const std::string& text);

/// The same grammar plus `part <w> <elem> | <elem> | ...` rows giving
/// constituent basis rows (w is the 1-based canonical factor index); builds
/// the code from the constituents. gen lines are not allowed here.
MTCode parse_trace_text(const std::string& text);

/// Emit a code in the code-specification format (round-trips through
/// parse_code_text).
std::string emit_code_text(const MTCode& code);

struct ReportOptions {
    bool kv = false;                            // machine-readable key-value lines
    uint64_t exact_budget = uint64_t(1) << 24;  // codeword cap for exact distances
    bool with_exact = true;
    std::string omega;                          // optional second twist vector (encoded, space-separated)
};

std::string factor_report(const Spectrum& spec, const ReportOptions& opt);
std::string analyze_report(const MTCode& code, const ReportOptions& opt);
std::string census_report_text(const Spectrum& spec, const ReportOptions& opt);
std::string bound_report_text(const MTCode& code, const ReportOptions& opt);
/// Dual code emitted as a code-specification file (closed form when the
/// moduli are pairwise coprime, nullspace basis otherwise).
std::string dual_report_text(const MTCode& code);

/// Enumerate all codes of the spectrum by constituent tuples and list those
/// matching the predicate ("selfdual" | "selforthogonal" | "lcd").
/// Refuses when the total count exceeds the cap.
std::string search_report_text(const Spectrum& spec, const std::string& predicate,
                               uint64_t cap, const ReportOptions& opt);

} // namespace mtx
