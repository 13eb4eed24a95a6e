#include "doctest.h"
#include "mtx/field.hpp"
#include "mtx/selftest.hpp"

using namespace mtx;

TEST_CASE("make_field canonical moduli") {
    const Field* F2 = Field::make(2, 1);
    CHECK(F2->order() == 2);
    // only monic irreducible quadratic over F_2
    const Field* F4 = Field::make(2, 2);
    CHECK(F4->modulus() == std::vector<uint32_t>{1, 1, 1});
    // scan of the 49 monic quadratics over F_7 ends at x^2+1
    const Field* F49 = Field::make(7, 2);
    CHECK(F49->modulus() == std::vector<uint32_t>{1, 0, 1});
    // interning: same parameters give the same instance
    CHECK(Field::make(7, 2) == F49);
    CHECK(Field::make(7, 2, {1, 0, 1}) == F49);
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1), MtxError);               // p not prime
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), MtxError);    // (x+1)^2 reducible
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 1, 1}), MtxError); // degree mismatch
    CHECK_THROWS_AS(Field::make(2, 25), MtxError);              // beyond the 2^20 cap
}

TEST_CASE("arithmetic examples") {
    const Field* F5 = Field::make(5, 1);
    CHECK(F5->from_int(3) * F5->from_int(2) == F5->one());
    const Field* F7 = Field::make(7, 1);
    CHECK(F7->inv(F7->from_int(3)) == F7->from_int(5));
    CHECK_THROWS_AS(F7->inv(F7->zero()), MtxError);
    const Field* F4 = Field::make(2, 2);
    auto a = F4->gen();
    CHECK(a * a == a + F4->one()); // forced by the modulus
    // field mismatch is rejected
    CHECK_THROWS_AS(F5->add(F5->one(), F7->one()), MtxError);
    // pow with large exponents
    CHECK(F7->pow(F7->from_int(3), 600) == F7->pow(F7->from_int(3), 600 % 6));
}

TEST_CASE("trace to base") {
    const Field* F2 = Field::make(2, 1);
    const Field* F4 = Field::make(2, 2);
    SubfieldMap emb(F2, F4);
    CHECK(emb.trace(F4->zero()).is_zero());
    CHECK(emb.trace(F4->gen()) == F2->one()); // a + a^2 = 1
    const Field* F7 = Field::make(7, 1);
    const Field* F49 = Field::make(7, 2);
    SubfieldMap emb7(F7, F49);
    CHECK(emb7.trace(F49->one()) == F7->from_int(2)); // 1 + 1^7
    // base not a subfield
    CHECK_THROWS_AS(SubfieldMap(Field::make(2, 2), Field::make(2, 3)), MtxError);
}

TEST_CASE("multiplicative order and squares") {
    const Field* F7 = Field::make(7, 1);
    CHECK(F7->mult_order(F7->one()) == 1);
    CHECK(F7->mult_order(F7->from_int(3)) == 6);
    const Field* F5 = Field::make(5, 1);
    CHECK(F5->mult_order(F5->from_int(2)) == 4);
    CHECK_THROWS_AS(F5->mult_order(F5->zero()), MtxError);
    CHECK(F5->is_square(F5->neg(F5->one())));  // 2^2 = 4 = -1
    const Field* F3 = Field::make(3, 1);
    CHECK_FALSE(F3->is_square(F3->neg(F3->one())));
    const Field* F2 = Field::make(2, 1);
    CHECK(F2->is_square(F2->one()));
    CHECK(F2->is_square(F2->zero()));
}

TEST_CASE("element text encoding") {
    const Field* F49 = Field::make(7, 2);
    FieldElement x = F49->decode("3,1");
    CHECK(F49->encode(x) == "3,1");
    CHECK(x == F49->from_int(3) + F49->gen());
    const Field* F5 = Field::make(5, 1);
    CHECK(F5->encode(F5->from_int(4)) == "4");
    CHECK_THROWS_AS(F5->decode("5"), MtxError);   // digit not reduced
    CHECK_THROWS_AS(F5->decode("x"), MtxError);
    CHECK_THROWS_AS(F49->decode("1,2,3"), MtxError); // too many digits
}

TEST_CASE("field axiom suite") {
    auto r = selftest::field_suite(7);
    INFO(r.detail);
    CHECK(r.pass);
}
