#include "doctest.h"
#include "mtx/bounds.hpp"
#include "mtx/concat.hpp"
#include "mtx/selftest.hpp"

using namespace mtx;

TEST_CASE("exact distance") {
    const Field* F2 = Field::make(2, 1);
    auto sh = ModuleShape::make(F2, {{7, F2->one()}});
    MTCode ham(sh, {{Poly::decode(F2, "1 1 0 1")}});
    auto d = min_distance_exact(ham);
    CHECK(d.exact);
    CHECK(d.distance == 3);
    // whole space: distance 1
    MTCode whole(sh, {{Poly::one(F2)}});
    CHECK(min_distance_exact(whole).distance == 1);
    // zero code is an error
    MTCode zero(sh, {});
    CHECK_THROWS_AS(min_distance_exact(zero), MtxError);
    // budget exhaustion yields an upper bound
    auto partial = min_distance_exact(ham, 4);
    CHECK_FALSE(partial.exact);
    CHECK(partial.distance >= 3);
}

TEST_CASE("bch bound examples") {
    const Field* F2 = Field::make(2, 1);
    auto sh = ModuleShape::make(F2, {{7, F2->one()}});
    MTCode ham(sh, {{Poly::decode(F2, "1 1 0 1")}});
    BoundContext ctx(ham.spectrum());
    auto rep = bch_bound(ham, ctx);
    CHECK(rep.bound == 3);
    CHECK(rep.runs_cyclic[0] == 2); // zero exponents {1,2,4}
    MTCode whole(sh, {{Poly::one(F2)}});
    CHECK(bch_bound(whole, ctx).bound == 1);
    MTCode zero(sh, {});
    CHECK_THROWS_AS(bch_bound(zero, ctx), MtxError);
    // twisted blocks: single-root projections give runs of length 1
    const Field* F5 = Field::make(5, 1);
    auto sh5 = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    MTCode c(sh5, {{Poly::decode(F5, "3 1"), Poly::decode(F5, "2 1")}});
    auto rep5 = bch_bound(c);
    CHECK(rep5.bound == 2);
    CHECK(min_distance_exact(c).distance >= 2);
}

TEST_CASE("concat bound examples") {
    const Field* F2 = Field::make(2, 1);
    auto spec = Spectrum::build(F2, {{7, F2->one()}});
    ConcatContext cctx(spec);
    // single full constituent on x^3+x+1: the minimal ideal is a [7,3,4] code
    std::vector<ConstituentCode> parts(spec->factor_count());
    for (size_t w = 0; w < parts.size(); ++w) {
        parts[w].w = w;
        parts[w].field = spec->factor(w).constituent_field;
        parts[w].basis = FqMat(parts[w].field, 1);
    }
    int widx = spec->index_of_poly(Poly::decode(F2, "1 1 0 1"));
    REQUIRE(widx >= 0);
    parts[static_cast<size_t>(widx)].basis.add_row({1});
    MTCode single = build_from_constituents(spec, parts);
    CHECK(concat_bound(single).bound == 4);
    CHECK(min_distance_exact(single).distance == 4);
    // whole space: bound 1
    auto sh = ModuleShape::make(F2, {{7, F2->one()}});
    MTCode whole(sh, {{Poly::one(F2)}});
    CHECK(concat_bound(whole).bound == 1);
}

TEST_CASE("bounds are sound on the length-15 example") {
    const Field* F2 = Field::make(2, 1);
    auto sh = ModuleShape::make(F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}});
    MTCode c(sh, {
                     {Poly::decode(F2, "1 0 1"), Poly::decode(F2, "0 1 0 1"),
                      Poly::decode(F2, "1 1 0 1")},
                     {Poly::decode(F2, "0 1 1"), Poly::decode(F2, "1 1 1 1 1"),
                      Poly::decode(F2, "1 0 1 1")},
                 });
    auto d = min_distance_exact(c); // 2^14 words
    REQUIRE(d.exact);
    BoundContext ctx(c.spectrum());
    CHECK(concat_bound(c, ctx).bound <= d.distance);
    CHECK(bch_bound(c, ctx).bound <= d.distance);
}

TEST_CASE("dimension bound for doubly twisted codes") {
    const Field* F7 = Field::make(7, 1);
    auto sh = ModuleShape::make(F7, {{2, F7->from_int(2)}, {1, F7->one()}});
    MTCode c(sh, {{Poly::one(F7), Poly(F7)}, {Poly::x(F7), Poly(F7)}});
    auto res = dim_bound_double_twist(c, {F7->from_int(4), F7->one()});
    CHECK(res.applicable);
    CHECK(res.bound == 2);
    CHECK(c.dimension() == 2); // tight
    // empty intersection: twists differ only where the projection vanishes
    MTCode c2(sh, {{Poly(F7), Poly::one(F7)}});
    auto res2 = dim_bound_double_twist(c2, {F7->from_int(4), F7->one()});
    CHECK_FALSE(res2.applicable);
    // not invariant under the second twist: a proper constacyclic code is
    // stable only for its own twist
    const Field* F5 = Field::make(5, 1);
    auto sh5 = ModuleShape::make(F5, {{3, F5->from_int(2)}});
    MTCode c3(sh5, {{Poly::decode(F5, "2 1")}});
    auto res3 = dim_bound_double_twist(c3, {F5->from_int(3)});
    CHECK_FALSE(res3.applicable);
    CHECK(res3.reason.find("not invariant") != std::string::npos);
    // omega equal to the code twists is rejected
    CHECK_THROWS_AS(dim_bound_double_twist(c, {F7->from_int(2), F7->one()}), MtxError);
}

TEST_CASE("bounds soundness suite") {
    auto r = selftest::bounds_suite(7);
    INFO(r.detail);
    CHECK(r.pass);
}
