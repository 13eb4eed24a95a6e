#include "doctest.h"
#include "mtx/poly.hpp"
#include "mtx/selftest.hpp"

using namespace mtx;

TEST_CASE("poly arithmetic examples") {
    const Field* F5 = Field::make(5, 1);
    Poly xp3 = Poly::decode(F5, "3 1");
    Poly cube = Poly::binomial(F5, 3, F5->from_int(3));
    CHECK(poly_gcd(xp3, cube) == xp3);
    Poly q1 = Poly::decode(F5, "4 2 1"), q2 = Poly::decode(F5, "4 3 1");
    CHECK(poly_lcm(q1, q2) == (q1 * q2).monic());
    CHECK_THROWS_AS(q1.divrem(Poly(F5)), MtxError);
    const Field* F2 = Field::make(2, 1);
    CHECK_THROWS_AS(Poly::decode(F2, "1 1") + Poly::decode(F5, "1 1"), MtxError);
    // eval in an extension through the canonical embedding
    const Field* F4 = Field::make(2, 2);
    SubfieldMap emb(F2, F4);
    CHECK(Poly::decode(F2, "1 1 1").eval_ext(F4->gen(), emb).is_zero());
}

TEST_CASE("reciprocal") {
    const Field* F5 = Field::make(5, 1);
    CHECK(reciprocal(Poly::decode(F5, "3 1")) == Poly::decode(F5, "2 1"));   // (x-2)* = x-3
    CHECK(reciprocal(Poly::decode(F5, "4 2 1")) == Poly::decode(F5, "4 3 1"));
    const Field* F2 = Field::make(2, 1);
    CHECK(reciprocal(Poly::decode(F2, "1 1")) == Poly::decode(F2, "1 1"));
    CHECK_THROWS_AS(reciprocal(Poly(F2)), MtxError);            // zero polynomial
    CHECK_THROWS_AS(reciprocal(Poly::x(F2)), MtxError);         // zero constant term
    CHECK(reciprocal_class(Poly::decode(F2, "1 1")) == ReciprocalClass::self_reciprocal);
    CHECK(reciprocal_class(Poly::decode(F5, "3 1")) == ReciprocalClass::other);
    CHECK(reciprocal_class(Poly::decode(F2, "1 1 1")) == ReciprocalClass::self_reciprocal);
    // reducible input rejected
    CHECK_THROWS_AS(reciprocal_class(Poly::decode(F2, "1 0 1")), MtxError);
}

TEST_CASE("factor_binomial examples") {
    const Field* F2 = Field::make(2, 1);
    auto f1 = factor_binomial(F2, 3, F2->one());
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == Poly::decode(F2, "1 1"));
    CHECK(f1[1] == Poly::decode(F2, "1 1 1"));

    const Field* F7 = Field::make(7, 1);
    auto f2 = factor_binomial(F7, 4, F7->from_int(4));
    REQUIRE(f2.size() == 3);
    CHECK(f2[0] == Poly::decode(F7, "3 1"));
    CHECK(f2[1] == Poly::decode(F7, "4 1"));
    CHECK(f2[2] == Poly::decode(F7, "2 0 1"));

    const Field* F5 = Field::make(5, 1);
    auto f3 = factor_binomial(F5, 3, F5->from_int(3));
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == Poly::decode(F5, "3 1"));
    CHECK(f3[1] == Poly::decode(F5, "4 2 1"));

    CHECK_THROWS_AS(factor_binomial(F5, 10, F5->one()), MtxError);  // gcd(m, q) != 1
    CHECK_THROWS_AS(factor_binomial(F5, 3, F5->zero()), MtxError);  // lambda zero
}

TEST_CASE("independent irreducibility test") {
    const Field* F2 = Field::make(2, 1);
    CHECK(is_irreducible(Poly::decode(F2, "1 1 0 1")));
    CHECK_FALSE(is_irreducible(Poly::decode(F2, "1 0 1")));
    CHECK_FALSE(is_irreducible(Poly::one(F2)));
    const Field* F4 = Field::make(2, 2);
    // x^2 + x + w is irreducible over F_4
    CHECK(is_irreducible(Poly(F4, {F4->gen(), F4->one(), F4->one()})));
}

TEST_CASE("poly text round trip") {
    const Field* F49 = Field::make(7, 2);
    Poly p = Poly::decode(F49, "4,0 2,0 1,0");
    CHECK(p.encode() == "4,0 2,0 1,0");
    CHECK(p.degree() == 2);
    const Field* F5 = Field::make(5, 1);
    CHECK(Poly::decode(F5, "4 2 1").encode() == "4 2 1");
    CHECK(Poly::decode(F5, "0").is_zero());
}

TEST_CASE("poly property suite") {
    auto r = selftest::poly_suite(7);
    INFO(r.detail);
    CHECK(r.pass);
}
