#include "mtcodes.h"

#include <cstring>
#include <sstream>

#include "mtx/io.hpp"
#include "mtx/selftest.hpp"

using namespace mtx;

struct mtx_code {
    MTCode code;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

ReportOptions convert(const mtx_report_options* opt) {
    ReportOptions r;
    if (opt) {
        r.kv = opt->kv != 0;
        if (opt->exact_budget) r.exact_budget = opt->exact_budget;
        r.with_exact = opt->skip_exact == 0;
        if (opt->omega) r.omega = opt->omega;
    }
    return r;
}

template <typename Fn>
mtx_status guarded(char** out, char** err, Fn&& fn) {
    if (out) *out = nullptr;
    if (err) *err = nullptr;
    try {
        std::string text = fn();
        if (out) *out = dup_string(text);
        return MTX_OK;
    } catch (const MtxError& e) {
        set_err(err, e.what());
        return MTX_EINPUT;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return MTX_EINTERNAL;
    }
}

} // namespace

extern "C" {

unsigned mtx_abi_version(void) { return 1; }

const char* mtx_status_name(mtx_status st) {
    switch (st) {
    case MTX_OK: return "ok";
    case MTX_EUSAGE: return "usage";
    case MTX_EINPUT: return "invalid input";
    case MTX_EVERIFY: return "verification mismatch";
    case MTX_EINTERNAL: return "internal error";
    }
    return "unknown";
}

mtx_status mtx_code_parse(const char* text, mtx_code** out, char** err) {
    if (err) *err = nullptr;
    if (!text || !out) {
        set_err(err, "null argument");
        return MTX_EUSAGE;
    }
    *out = nullptr;
    try {
        MTCode code = parse_code_text(text);
        *out = new mtx_code{std::move(code)};
        return MTX_OK;
    } catch (const MtxError& e) {
        set_err(err, e.what());
        return MTX_EINPUT;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return MTX_EINTERNAL;
    }
}

void mtx_code_free(mtx_code* code) { delete code; }

void mtx_string_free(char* s) { std::free(s); }

int64_t mtx_code_length(const mtx_code* code) {
    return code ? static_cast<int64_t>(code->code.length()) : -1;
}

int64_t mtx_code_dimension(const mtx_code* code) {
    if (!code) return -1;
    try {
        return static_cast<int64_t>(code->code.dimension());
    } catch (...) {
        return -1;
    }
}

int64_t mtx_code_generator_count(const mtx_code* code) {
    return code ? static_cast<int64_t>(code->code.rho()) : -1;
}

mtx_status mtx_report_factor(const mtx_code* code, const mtx_report_options* opt, char** out,
                             char** err) {
    if (!code || !out) return MTX_EUSAGE;
    return guarded(out, err,
                   [&] { return factor_report(*code->code.spectrum(), convert(opt)); });
}

mtx_status mtx_report_analyze(const mtx_code* code, const mtx_report_options* opt, char** out,
                              char** err) {
    if (!code || !out) return MTX_EUSAGE;
    return guarded(out, err, [&] { return analyze_report(code->code, convert(opt)); });
}

mtx_status mtx_report_census(const mtx_code* code, const mtx_report_options* opt, char** out,
                             char** err) {
    if (!code || !out) return MTX_EUSAGE;
    return guarded(out, err,
                   [&] { return census_report_text(*code->code.spectrum(), convert(opt)); });
}

mtx_status mtx_report_bound(const mtx_code* code, const mtx_report_options* opt, char** out,
                            char** err) {
    if (!code || !out) return MTX_EUSAGE;
    return guarded(out, err, [&] { return bound_report_text(code->code, convert(opt)); });
}

mtx_status mtx_dual_text(const mtx_code* code, char** out, char** err) {
    if (!code || !out) return MTX_EUSAGE;
    return guarded(out, err, [&] { return dual_report_text(code->code); });
}

mtx_status mtx_trace_build(const char* trace_text, char** out, char** err) {
    if (!trace_text || !out) return MTX_EUSAGE;
    return guarded(out, err, [&] { return emit_code_text(parse_trace_text(trace_text)); });
}

mtx_status mtx_search(const mtx_code* code, const char* predicate, uint64_t cap,
                      const mtx_report_options* opt, char** out, char** err) {
    if (!code || !predicate || !out) return MTX_EUSAGE;
    return guarded(out, err, [&] {
        return search_report_text(*code->code.spectrum(), predicate, cap, convert(opt));
    });
}

mtx_status mtx_verify(uint64_t seed, int full_grid, char** out) {
    if (out) *out = nullptr;
    try {
        std::ostringstream os;
        bool ok = selftest::verify(seed, os, full_grid != 0);
        if (out) *out = dup_string(os.str());
        return ok ? MTX_OK : MTX_EVERIFY;
    } catch (const std::exception& e) {
        if (out) *out = dup_string(std::string("verify aborted: ") + e.what());
        return MTX_EINTERNAL;
    }
}

} // extern "C"
