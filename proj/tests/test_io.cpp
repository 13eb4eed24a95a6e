#include "doctest.h"
#include "mtx/io.hpp"

using namespace mtx;

TEST_CASE("parse a minimal code file") {
    MTCode c = parse_code_text("field 2 1\nblock 3 1\ngen 1 1\n");
    CHECK(c.length() == 3);
    CHECK(c.dimension() == 2);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_code_text("field 2 1\nblock 3 0\n"),
                         "line 2: lambda must be nonzero", MtxError);
    CHECK_THROWS_WITH_AS(parse_code_text("field 5 1\nblock 5 1\n"),
                         "line 2: block 1: gcd(m, q) != 1", MtxError);
    CHECK_THROWS_AS(parse_code_text("block 3 1\n"), MtxError);       // block before field
    CHECK_THROWS_AS(parse_code_text("field 2 1\ngen 1\n"), MtxError); // gen before block
    CHECK_THROWS_AS(parse_code_text("field 2 1\nblock 3 1\ngen 1 | 1\n"), MtxError);
    CHECK_THROWS_AS(parse_code_text("frobnicate\n"), MtxError);
    CHECK_THROWS_AS(parse_code_text("field 4 1\nblock 3 1\n"), MtxError); // p not prime
}

TEST_CASE("round trip through emit") {
    std::string text = "field 5 1\nblock 3 3\nblock 3 2\ngen 3 1 | 2 1\n";
    MTCode c = parse_code_text(text);
    std::string emitted = emit_code_text(c);
    MTCode c2 = parse_code_text(emitted);
    CHECK(same_rowspace(c.span_matrix(), c2.span_matrix()));
    CHECK(c2.shape()->same(*c.shape()));
    // extension field with explicit modulus token
    MTCode c4 = parse_code_text("field 2 2\nblock 3 0,1\ngen 1,0 0,1\n");
    std::string e4 = emit_code_text(c4);
    CHECK(e4.find("field 2 2 1,1,1") == 0);
    MTCode c4b = parse_code_text(e4);
    CHECK(same_rowspace(c4.span_matrix(), c4b.span_matrix()));
}

TEST_CASE("comments and whitespace are tolerated") {
    MTCode c = parse_code_text("# header\n  field 2 1 # trailing\n\nblock 3 1\n gen 1 1 # g\n");
    CHECK(c.dimension() == 2);
}

TEST_CASE("analyze report contains the headline numbers") {
    MTCode c = parse_code_text(
        "field 2 1\nblock 3 1\nblock 5 1\nblock 7 1\n"
        "gen 1 0 1 | 0 1 0 1 | 1 1 0 1\ngen 0 1 1 | 1 1 1 1 1 | 1 0 1 1\n");
    ReportOptions opt;
    opt.with_exact = false;
    std::string rep = analyze_report(c, opt);
    CHECK(rep.find("dim = 14") != std::string::npos);
    CHECK(rep.find("deg h = 13") != std::string::npos);
    ReportOptions kv;
    kv.kv = true;
    kv.with_exact = false;
    std::string krep = analyze_report(c, kv);
    CHECK(krep.find("dim = 14") != std::string::npos);
    CHECK(krep.find("parity_degree = 13") != std::string::npos);
}

TEST_CASE("census report footer") {
    MTCode c = parse_code_text("field 2 1\nblock 3 1\nblock 3 1\n");
    ReportOptions opt;
    std::string rep = census_report_text(*c.spectrum(), opt);
    CHECK(rep.find("N = 35, N0 = 3, N1 = 8") != std::string::npos);
}

TEST_CASE("dual report emits a parsable file with inverted twists") {
    MTCode c = parse_code_text("field 5 1\nblock 3 3\nblock 3 2\ngen 3 1 | 2 1\n");
    std::string text = dual_report_text(c);
    CHECK(text.find("block 3 2") != std::string::npos);
    CHECK(text.find("block 3 3") != std::string::npos);
    MTCode d = parse_code_text(text);
    CHECK(d.shape()->blocks()[0].lambda == c.field()->from_int(2));
    CHECK(d.rank() == 2);
}

TEST_CASE("trace input builds the expected code") {
    std::string text =
        "field 7 1\nblock 2 2\nblock 4 4\n"
        "part 1 1 | 0\npart 2 0 | 1\npart 3 0,0 | 1,2\n";
    MTCode c = parse_trace_text(text);
    // dims: 1 + 1 + 2 = 4
    CHECK(c.dimension() == 4);
    const auto& cons = c.constituents();
    CHECK(cons[0].dim() == 1);
    CHECK(cons[1].dim() == 1);
    CHECK(cons[2].dim() == 1);
    // errors: gen lines not allowed, support violations flagged
    CHECK_THROWS_AS(parse_trace_text("field 7 1\nblock 2 2\ngen 1 1\n"), MtxError);
    CHECK_THROWS_AS(
        parse_trace_text("field 7 1\nblock 2 2\nblock 4 4\npart 3 1,0 | 0,0\n"), MtxError);
    CHECK_THROWS_AS(parse_trace_text("field 7 1\nblock 2 2\npart 5 1 | 1\n"), MtxError);
}

TEST_CASE("search report") {
    MTCode c = parse_code_text("field 2 1\nblock 3 1\nblock 3 1\n");
    ReportOptions opt;
    std::string rep = search_report_text(*c.spectrum(), "selfdual", 1000, opt);
    CHECK(rep.find("matches = 3") != std::string::npos);
    std::string rep2 = search_report_text(*c.spectrum(), "selforthogonal", 1000, opt);
    CHECK(rep2.find("matches = 8") != std::string::npos);
    CHECK_THROWS_AS(search_report_text(*c.spectrum(), "selfdual", 10, opt), MtxError); // cap
    CHECK_THROWS_AS(search_report_text(*c.spectrum(), "nonsense", 1000, opt), MtxError);
}

TEST_CASE("factor report is deterministic") {
    MTCode c = parse_code_text("field 5 1\nblock 3 3\nblock 3 2\n");
    ReportOptions opt;
    CHECK(factor_report(*c.spectrum(), opt) == factor_report(*c.spectrum(), opt));
    opt.kv = true;
    std::string kv = factor_report(*c.spectrum(), opt);
    CHECK(kv.find("factor.1.class = P:3") != std::string::npos);
}
