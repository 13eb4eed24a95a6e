// mtx: command-line front end for the multi-twisted code toolkit.
// Talks to the library exclusively through the C API in mtcodes.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mtcodes.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

bool read_input(const std::string& path, std::string& out, std::string& errmsg) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        out = os.str();
        return true;
    }
    std::ifstream in(path);
    if (!in) {
        errmsg = "cannot open '" + path + "'";
        return false;
    }
    std::ostringstream os;
    os << in.rdbuf();
    out = os.str();
    return true;
}

struct CodeHandle {
    mtx_code* code = nullptr;
    ~CodeHandle() { mtx_code_free(code); }
};

int load_code(const std::string& path, CodeHandle& h) {
    std::string text, errmsg;
    if (!read_input(path, text, errmsg)) {
        std::cerr << "mtx: " << errmsg << "\n";
        return kExitInput;
    }
    char* err = nullptr;
    mtx_status st = mtx_code_parse(text.c_str(), &h.code, &err);
    if (st != MTX_OK) {
        std::cerr << "mtx: " << (err ? err : mtx_status_name(st)) << "\n";
        mtx_string_free(err);
        return st == MTX_EINPUT ? kExitInput : kExitUsage;
    }
    return kExitOk;
}

int emit(mtx_status st, char* out, char* err) {
    if (out) {
        std::cout << out;
        mtx_string_free(out);
    }
    if (st != MTX_OK) {
        std::cerr << "mtx: " << (err ? err : mtx_status_name(st)) << "\n";
        mtx_string_free(err);
        return st == MTX_EINPUT ? kExitInput : (st == MTX_EVERIFY ? kExitVerify : kExitUsage);
    }
    mtx_string_free(err);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-twisted code toolkit"};
    app.require_subcommand(1);

    std::string input;
    bool kv = false;
    uint64_t budget = 0;
    bool no_exact = false;
    std::string omega;
    std::string predicate = "selfdual";
    uint64_t cap = 1000000;
    uint64_t seed = 1;
    bool quick = false;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", input, "code specification file ('-' for stdin)")
                ->required();
        sub->add_flag("--kv", kv, "machine-readable key-value output");
    };

    auto* factor = app.add_subcommand("factor", "factor spectrum of the block system");
    add_common(factor, true);
    auto* analyze = app.add_subcommand("analyze", "full report for one code");
    add_common(analyze, true);
    analyze->add_option("--exact-budget", budget, "codeword cap for exact distance");
    analyze->add_flag("--no-exact", no_exact, "skip exact distance enumeration");
    auto* dual = app.add_subcommand("dual", "emit the dual code");
    add_common(dual, true);
    auto* censusc = app.add_subcommand("census", "counting report (totals, self-dual, self-orthogonal)");
    add_common(censusc, true);
    auto* bound = app.add_subcommand("bound", "distance bounds report");
    add_common(bound, true);
    bound->add_option("--exact-budget", budget, "codeword cap for exact distance");
    bound->add_flag("--no-exact", no_exact, "skip exact distance enumeration");
    bound->add_option("--omega", omega, "second twist vector (space-separated encodings)");
    auto* trace = app.add_subcommand("trace", "build a code from constituent basis rows");
    add_common(trace, true);
    auto* search = app.add_subcommand("search", "enumerate codes matching a predicate");
    add_common(search, true);
    search->add_option("--pred", predicate, "selfdual | selforthogonal | lcd");
    search->add_option("--cap", cap, "refuse when the code count exceeds this");
    auto* verify = app.add_subcommand("verify", "run every verification suite");
    verify->add_option("--seed", seed, "seed for randomized suites");
    verify->add_flag("--quick", quick, "reduced oracle grid");
    verify->add_flag("--kv", kv, "(accepted for symmetry; output is already line-based)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    mtx_report_options opt{};
    opt.kv = kv ? 1 : 0;
    opt.exact_budget = budget;
    opt.skip_exact = no_exact ? 1 : 0;
    opt.omega = omega.empty() ? nullptr : omega.c_str();

    char* out = nullptr;
    char* err = nullptr;

    if (verify->parsed()) {
        mtx_status st = mtx_verify(seed, quick ? 0 : 1, &out);
        if (out) {
            std::cout << out;
            mtx_string_free(out);
        }
        return st == MTX_OK ? kExitOk : kExitVerify;
    }

    if (trace->parsed()) {
        std::string text, errmsg;
        if (!read_input(input, text, errmsg)) {
            std::cerr << "mtx: " << errmsg << "\n";
            return kExitInput;
        }
        mtx_status st = mtx_trace_build(text.c_str(), &out, &err);
        return emit(st, out, err);
    }

    CodeHandle h;
    if (int rc = load_code(input, h); rc != kExitOk) return rc;

    mtx_status st = MTX_EUSAGE;
    if (factor->parsed()) st = mtx_report_factor(h.code, &opt, &out, &err);
    else if (analyze->parsed()) st = mtx_report_analyze(h.code, &opt, &out, &err);
    else if (censusc->parsed()) st = mtx_report_census(h.code, &opt, &out, &err);
    else if (bound->parsed()) st = mtx_report_bound(h.code, &opt, &out, &err);
    else if (dual->parsed()) st = mtx_dual_text(h.code, &out, &err);
    else if (search->parsed()) st = mtx_search(h.code, predicate.c_str(), cap, &opt, &out, &err);
    return emit(st, out, err);
}
