#include "doctest.h"
#include "mtx/concat.hpp"
#include "mtx/selftest.hpp"

using namespace mtx;

TEST_CASE("idempotents of the binary length-3 ring") {
    const Field* F2 = Field::make(2, 1);
    auto spec = Spectrum::build(F2, {{3, F2->one()}});
    ConcatContext ctx(spec);
    // factor order: x+1 then x^2+x+1
    REQUIRE(spec->factor(0).g == Poly::decode(F2, "1 1"));
    // theta generates <(x^3-1)/g>: for g = x+1 that ideal is <x^2+x+1> and
    // its idempotent is x^2+x+1 itself; for g = x^2+x+1 it is x^2+x
    CHECK(ctx.idempotent(0, 0) == Poly::decode(F2, "1 1 1"));
    CHECK(ctx.idempotent(1, 0) == Poly::decode(F2, "0 1 1"));
    // m = 1 block: theta = 1
    auto spec1 = Spectrum::build(F2, {{1, F2->one()}});
    ConcatContext ctx1(spec1);
    CHECK(ctx1.idempotent(0, 0).is_one());
}

TEST_CASE("zero-incidence convention") {
    const Field* F7 = Field::make(7, 1);
    auto spec = Spectrum::build(F7, {{2, F7->from_int(2)}, {4, F7->from_int(4)}});
    ConcatContext ctx(spec);
    // x^2+2 divides only the second block
    REQUIRE(spec->factor(2).eps == std::vector<int>{0, 1});
    CHECK(ctx.idempotent_or_zero(2, 0).is_zero());
    CHECK_THROWS_AS(ctx.idempotent(2, 0), MtxError);
    CHECK_FALSE(ctx.idempotent_or_zero(2, 1).is_zero());
}

TEST_CASE("psi and phi") {
    const Field* F2 = Field::make(2, 1);
    auto spec = Spectrum::build(F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}});
    ConcatContext ctx(spec);
    for (size_t w = 0; w < spec->factor_count(); ++w) {
        const Field* Fw = spec->factor(w).constituent_field;
        for (size_t i = 0; i < spec->ell(); ++i) {
            if (!spec->factor(w).eps[i]) continue;
            CHECK(ctx.psi(w, i, Fw->one()) == ctx.idempotent(w, i));
            CHECK(ctx.psi(w, i, Fw->zero()).is_zero());
            FieldElement g = Fw->from_index(Fw->order() - 1);
            CHECK(ctx.phi(w, i, ctx.psi(w, i, g)) == g);
        }
    }
    // phi rejects polynomials outside the minimal ideal
    CHECK_THROWS_AS(ctx.phi(0, 0, Poly::x(F2)), MtxError);
}

TEST_CASE("concat of a full constituent is the idempotent module") {
    const Field* F2 = Field::make(2, 1);
    auto spec = Spectrum::build(F2, {{3, F2->one()}, {3, F2->one()}});
    ConcatContext ctx(spec);
    for (size_t w = 0; w < spec->factor_count(); ++w) {
        const FactorInfo& fi = spec->factor(w);
        ConstituentCode full;
        full.w = w;
        full.field = fi.constituent_field;
        full.basis = FqMat(full.field, 2);
        for (size_t i = 0; i < 2; ++i) {
            if (!fi.eps[i]) continue;
            std::vector<uint32_t> row(2, 0);
            row[i] = 1;
            full.basis.add_row(std::move(row));
        }
        FqMat rows = concat_code(ctx, w, full);
        CHECK(rank_of(rows) == fi.eps_sum * fi.degree);
        // zero constituent gives the zero code
        ConstituentCode zero;
        zero.w = w;
        zero.field = fi.constituent_field;
        zero.basis = FqMat(zero.field, 2);
        CHECK(concat_code(ctx, w, zero).nrows() == 0);
    }
}

TEST_CASE("support violations are rejected") {
    const Field* F7 = Field::make(7, 1);
    auto spec = Spectrum::build(F7, {{2, F7->from_int(2)}, {4, F7->from_int(4)}});
    ConcatContext ctx(spec);
    // x^2+2 has support (0,1); a row with a nonzero first coordinate violates it
    ConstituentCode bad;
    bad.w = 2;
    bad.field = spec->factor(2).constituent_field;
    bad.basis = FqMat(bad.field, 2);
    bad.basis.add_row({1, 0});
    CHECK_THROWS_AS(concat_code(ctx, 2, bad), MtxError);
}

TEST_CASE("concat of a prescribed first constituent") {
    const Field* F2 = Field::make(2, 1);
    auto spec = Spectrum::build(F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}});
    ConcatContext ctx(spec);
    // D = <(0,0,1),(0,1,1)> over F_2 at the factor x+1
    ConstituentCode d;
    d.w = 0;
    d.field = spec->factor(0).constituent_field;
    d.basis = FqMat(d.field, 3);
    d.basis.add_row({0, 0, 1});
    d.basis.add_row({0, 1, 1});
    rref(d.basis);
    FqMat rows = concat_code(ctx, 0, d);
    CHECK(rank_of(rows) == 2);
    // its constituents are D at w = 0 and zero elsewhere
    MTCode piece = MTCode::from_rows(spec, ctx.shape(), rows);
    const auto& cons = piece.constituents();
    CHECK(same_rowspace(cons[0].basis, d.basis));
    for (size_t w = 1; w < cons.size(); ++w) CHECK(cons[w].dim() == 0);
}

TEST_CASE("round trip through constituents") {
    const Field* F2 = Field::make(2, 1);
    auto shape = ModuleShape::make(F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}});
    MTCode c(shape, {
                        {Poly::decode(F2, "1 0 1"), Poly::decode(F2, "0 1 0 1"),
                         Poly::decode(F2, "1 1 0 1")},
                        {Poly::decode(F2, "0 1 1"), Poly::decode(F2, "1 1 1 1 1"),
                         Poly::decode(F2, "1 0 1 1")},
                    });
    MTCode rebuilt = build_from_constituents(c.spectrum(), c.constituents());
    CHECK(rebuilt.dimension() == 14);
    CHECK(same_rowspace(rebuilt.span_matrix(), c.span_matrix()));
    // all-zero parts give the zero code
    std::vector<ConstituentCode> zeros(c.spectrum()->factor_count());
    for (size_t w = 0; w < zeros.size(); ++w) {
        zeros[w].w = w;
        zeros[w].field = c.spectrum()->factor(w).constituent_field;
        zeros[w].basis = FqMat(zeros[w].field, 3);
    }
    CHECK(build_from_constituents(c.spectrum(), zeros).rank() == 0);
}

TEST_CASE("trace codeword basics") {
    const Field* F2 = Field::make(2, 1);
    auto spec = Spectrum::build(F2, {{3, F2->one()}, {3, F2->one()}});
    ConcatContext ctx(spec);
    std::vector<std::vector<FieldElement>> zero_delta(spec->factor_count());
    for (size_t w = 0; w < zero_delta.size(); ++w)
        zero_delta[w].assign(2, spec->factor(w).constituent_field->zero());
    CHECK(trace_codeword(ctx, zero_delta).is_zero());
    // support violation rejected
    auto bad = zero_delta;
    // factor x+1 divides both blocks; find one with partial support instead
    const Field* F7 = Field::make(7, 1);
    auto spec7 = Spectrum::build(F7, {{2, F7->from_int(2)}, {4, F7->from_int(4)}});
    ConcatContext ctx7(spec7);
    std::vector<std::vector<FieldElement>> d7(spec7->factor_count());
    for (size_t w = 0; w < d7.size(); ++w)
        d7[w].assign(2, spec7->factor(w).constituent_field->zero());
    d7[2][0] = spec7->factor(2).constituent_field->one(); // eps_{3,1} = 0
    CHECK_THROWS_AS(trace_codeword(ctx7, d7), MtxError);
}

TEST_CASE("trace-concat property suite") {
    auto r = selftest::concat_suite(7);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("printed closed form suite (short)") {
    auto r = selftest::trace_example_suite(7, 100);
    INFO(r.detail);
    CHECK(r.pass);
}
