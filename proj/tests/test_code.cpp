#include "doctest.h"
#include "mtx/code.hpp"
#include "mtx/selftest.hpp"

using namespace mtx;

namespace {

MTCode example_two_generator() {
    const Field* F2 = Field::make(2, 1);
    auto shape = ModuleShape::make(F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}});
    return MTCode(shape, {
                             {Poly::decode(F2, "1 0 1"), Poly::decode(F2, "0 1 0 1"),
                              Poly::decode(F2, "1 1 0 1")},
                             {Poly::decode(F2, "0 1 1"), Poly::decode(F2, "1 1 1 1 1"),
                              Poly::decode(F2, "1 0 1 1")},
                         });
}

} // namespace

TEST_CASE("lambda shift") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    auto w1 = Codeword::from_indices(sh, {1, 0, 0, 0, 0, 0});
    CHECK(lambda_shift(w1).indices() == std::vector<uint32_t>{0, 1, 0, 0, 0, 0});
    auto w2 = Codeword::from_indices(sh, {0, 0, 1, 0, 0, 0});
    CHECK(lambda_shift(w2).indices() == std::vector<uint32_t>{3, 0, 0, 0, 0, 0});
    CHECK(lambda_unshift(lambda_shift(w2)) == w2);
    // shift equals multiplication by x
    auto w3 = Codeword::from_indices(sh, {1, 2, 3, 4, 0, 1});
    CHECK(lambda_shift(w3) == module_action(Poly::x(F5), w3));
}

TEST_CASE("span rank examples") {
    const Field* F7 = Field::make(7, 1);
    // genuinely coprime blocks: gcd(x^2-1, x^4-4) = 1 over F_7
    auto sh_cop = ModuleShape::make(F7, {{2, F7->one()}, {4, F7->from_int(4)}});
    MTCode whole(sh_cop, {{Poly::one(F7), Poly::one(F7)}});
    CHECK(whole.rank() == 6);
    CHECK(whole.parity_check().degree() == 6);
    // blocks sharing factors: rank drops to deg h
    auto sh_shared = ModuleShape::make(F7, {{2, F7->from_int(2)}, {4, F7->from_int(4)}});
    MTCode c(sh_shared, {{Poly::one(F7), Poly::one(F7)}});
    CHECK(c.parity_check().degree() == 4);
    CHECK(c.dimension() == 4);
    // zero generators
    MTCode zero(sh_cop, {});
    CHECK(zero.rank() == 0);
}

TEST_CASE("two-generator example code") {
    MTCode c = example_two_generator();
    CHECK(c.rank() == 14);
    CHECK(c.dimension() == 14);
    Poly h = c.parity_check();
    CHECK(h.degree() == 13);
    // h = (x+1)(x^4+x^3+x^2+x+1)(x^3+x^2+1)(x^3+x+1)(x^2+x+1)
    const Field* F2 = c.field();
    Poly expect = Poly::decode(F2, "1 1") * Poly::decode(F2, "1 1 1 1 1") *
                  Poly::decode(F2, "1 0 1 1") * Poly::decode(F2, "1 1 0 1") *
                  Poly::decode(F2, "1 1 1");
    CHECK(h == expect.monic());
    // constituent dimensions 2,1,1,1,1
    const auto& cons = c.constituents();
    REQUIRE(cons.size() == 5);
    CHECK(cons[0].dim() == 2);
    for (size_t w = 1; w < 5; ++w) CHECK(cons[w].dim() == 1);
    // membership
    CHECK(c.contains(c.generator_word(0)));
    CHECK(c.contains(lambda_shift(c.generator_word(1))));
}

TEST_CASE("block projections") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    MTCode c(sh, {{Poly::decode(F5, "3 1"), Poly::decode(F5, "2 1")}});
    CHECK(c.project_block(0) == Poly::decode(F5, "3 1"));
    CHECK(c.project_block(1) == Poly::decode(F5, "2 1"));
    const Field* F7 = Field::make(7, 1);
    auto sh9 = ModuleShape::make(F7, {{2, F7->from_int(2)}, {2, F7->from_int(5)}});
    MTCode c9(sh9, {{Poly::decode(F7, "1 1"), Poly(F7)}});
    CHECK(c9.project_block(0).is_one());
    CHECK(c9.project_block(1) == sh9->block_modulus(1).monic()); // zero projection
    // all-ones generator: every projection is the whole ring
    MTCode ones(sh, {{Poly::one(F5), Poly::one(F5)}});
    CHECK(ones.project_block(0).is_one());
    CHECK(ones.project_block(1).is_one());
}

TEST_CASE("one-generator dimension equals deg h") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(3)}});
    MTCode c(sh, {{Poly::one(F5), Poly::decode(F5, "1 1")}});
    CHECK(c.dimension() == 3);
    CHECK(c.parity_check().degree() == 3);
}

TEST_CASE("membership rejects a word outside a proper code") {
    const Field* F2 = Field::make(2, 1);
    auto sh = ModuleShape::make(F2, {{7, F2->one()}});
    MTCode ham(sh, {{Poly::decode(F2, "1 1 0 1")}});
    CHECK(ham.rank() == 4);
    bool found_outside = false;
    for (size_t j = 0; j < 7 && !found_outside; ++j) {
        std::vector<uint32_t> e(7, 0);
        e[j] = 1;
        if (!ham.contains(Codeword::from_indices(sh, e))) found_outside = true;
    }
    CHECK(found_outside);
    // shape mismatch
    auto sh2 = ModuleShape::make(F2, {{3, F2->one()}, {3, F2->one()}});
    CHECK_THROWS_AS(ham.contains(Codeword::zero(sh2)), MtxError);
}

TEST_CASE("mt-core property suite") {
    auto r = selftest::mtcore_suite(7);
    INFO(r.detail);
    CHECK(r.pass);
}
