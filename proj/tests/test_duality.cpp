#include "doctest.h"
#include "mtx/concat.hpp"
#include "mtx/duality.hpp"
#include "mtx/selftest.hpp"

using namespace mtx;

TEST_CASE("inner product basics") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    auto e1 = Codeword::from_indices(sh, {1, 0, 0, 0, 0, 0});
    auto e2 = Codeword::from_indices(sh, {0, 1, 0, 0, 0, 0});
    CHECK(inner_product(e1, e1) == F5->one());
    CHECK(inner_product(e1, e2).is_zero());
}

TEST_CASE("conjugation") {
    const Field* F5 = Field::make(5, 1);
    // x in the ring with twist 3 maps to 2x^2
    CHECK(conjugate_into(Poly::x(F5), 3, F5->from_int(3)) == Poly::decode(F5, "0 0 2"));
    CHECK(conjugate_into(Poly::one(F5), 3, F5->from_int(3)).is_one());
    CHECK_THROWS_AS(conjugate_into(Poly::x(F5), 3, F5->zero()), MtxError);
}

TEST_CASE("dual of the zero code is the whole space") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    MTCode z(sh, {});
    MTCode d = dual_code(z);
    CHECK(d.rank() == 6);
    CHECK(d.shape()->blocks()[0].lambda == F5->from_int(2)); // twists inverted
    CHECK(d.shape()->blocks()[1].lambda == F5->from_int(3));
}

TEST_CASE("form product vanishes against the dual") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    MTCode c(sh, {{Poly::decode(F5, "3 1"), Poly::decode(F5, "2 1")}});
    auto spec = c.spectrum();
    // (a, 0) = 0
    Codeword zero_b = Codeword::zero(sh->dual_shape());
    CHECK(form_product(spec, c.generator_word(0), zero_b).is_zero());
    // (a_k, b) = 0 for b in the dual
    MTCode d = dual_code(c);
    for (size_t r = 0; r < d.span_matrix().nrows(); ++r) {
        Codeword b = Codeword::from_indices(d.shape(), d.span_matrix().rows[r]);
        CHECK(form_product(spec, c.generator_word(0), b).is_zero());
    }
}

TEST_CASE("twisted pair example") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    MTCode c(sh, {{Poly::decode(F5, "3 1"), Poly::decode(F5, "2 1")}});
    CHECK(c.dimension() == 4);
    // parity check is the product of the two quadratic cofactors
    Poly h = c.parity_check();
    CHECK(h == (Poly::decode(F5, "4 2 1") * Poly::decode(F5, "4 3 1")).monic());
    CHECK(h.degree() == 4);
    // the two pair constituents vanish: the generators evaluate to zero at
    // the roots of x+3 and x+2
    const auto& cons = c.constituents();
    size_t zero_cons = 0;
    for (const auto& cc : cons) zero_cons += (cc.dim() == 0);
    CHECK(zero_cons == 2);
    MTCode dc = dual_closed_form(c);
    REQUIRE(dc.rho() == 2);
    CHECK(dc.generators()[0][0] == Poly::decode(F5, "4 3 1")); // x^2+3x+4
    CHECK(dc.generators()[0][1].is_zero());
    CHECK(dc.generators()[1][0].is_zero());
    CHECK(dc.generators()[1][1] == Poly::decode(F5, "4 2 1")); // x^2+2x+4
    MTCode dn = dual_code(c);
    CHECK(dn.rank() == 2);
    CHECK(same_rowspace(dc.span_matrix(), dn.span_matrix()));
    auto fl = duality_flags(c, dn);
    CHECK(fl.is_lcd);
    CHECK_FALSE(fl.is_self_dual);
    auto v = lcd_sufficient(c, dn, fl);
    CHECK(v.applicable);
    CHECK(v.small_dim);
    CHECK(v.proper_projections);
    CHECK(v.lcd_concluded);
    CHECK_FALSE(v.rule_contradicted);
}

TEST_CASE("two-irreducible-block example") {
    const Field* F7 = Field::make(7, 1);
    auto sh = ModuleShape::make(F7, {{2, F7->from_int(2)}, {2, F7->from_int(5)}});
    MTCode c(sh, {{Poly::decode(F7, "1 1"), Poly(F7)}});
    CHECK(c.dimension() == 2);
    MTCode d = dual_code(c);
    CHECK(d.rank() == 2);
    // dual = span{(0,1)} as a module: whole second block
    MTCode ref(sh->dual_shape(), {{Poly(F7), Poly::one(F7)}});
    CHECK(same_rowspace(d.span_matrix(), ref.span_matrix()));
    // closed form emits the zero tuple and (0,1)
    MTCode dcf = dual_closed_form(c);
    CHECK(dcf.generators()[0][0].is_zero());
    CHECK(dcf.generators()[0][1].is_zero());
    CHECK(dcf.generators()[1][1].is_one());
    auto fl = duality_flags(c, d);
    CHECK(fl.is_lcd);
    auto v = lcd_sufficient(c, d, fl);
    CHECK_FALSE(v.small_dim); // dims equal min m_i, the strict rule does not fire
    CHECK(v.proper_projections);
    CHECK(v.lcd_concluded);
}

TEST_CASE("equal-twist example") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(3)}});
    MTCode c(sh, {{Poly::one(F5), Poly::decode(F5, "1 1")}});
    MTCode d = dual_code(c);
    CHECK(c.dimension() == 3);
    CHECK(d.rank() == 3);
    MTCode ref(sh->dual_shape(), {{Poly::decode(F5, "3 4 3"), Poly::decode(F5, "2 0 1")}});
    CHECK(same_rowspace(d.span_matrix(), ref.span_matrix()));
    auto fl = duality_flags(c, d);
    CHECK(fl.is_lcd);
    CHECK_FALSE(fl.is_self_dual);
    auto v = lcd_sufficient(c, d, fl);
    CHECK(v.dim_eq_sd);
    CHECK_FALSE(v.small_dim);
    CHECK_FALSE(v.proper_projections);
    CHECK(v.lcd_concluded);
    // non-coprime blocks reject the closed form
    CHECK_THROWS_AS(dual_closed_form(c), MtxError);
}

TEST_CASE("self-dual flags example") {
    const Field* F2 = Field::make(2, 1);
    auto spec = Spectrum::build(F2, {{3, F2->one()}, {3, F2->one()}});
    auto shape = ModuleShape::make(F2, {{3, F2->one()}, {3, F2->one()}});
    // constituents <(1,1)> at both factors give a self-dual code
    std::vector<ConstituentCode> parts(2);
    for (size_t w = 0; w < 2; ++w) {
        parts[w].w = w;
        parts[w].field = spec->factor(w).constituent_field;
        parts[w].basis = FqMat(parts[w].field, 2);
        parts[w].basis.add_row({1, 1});
    }
    MTCode c = build_from_constituents(spec, parts);
    auto fl = duality_flags(c);
    CHECK(fl.is_self_dual);
    CHECK(fl.is_self_orthogonal);
    CHECK(fl.is_dual_containing);
    CHECK_FALSE(fl.is_lcd);
    // zero code: self-orthogonal, lcd, not self-dual for n > 0
    MTCode z(shape, {});
    auto flz = duality_flags(z);
    CHECK(flz.is_self_orthogonal);
    CHECK(flz.is_lcd);
    CHECK_FALSE(flz.is_self_dual);
}

TEST_CASE("whole-space code has the zero dual") {
    const Field* F5 = Field::make(5, 1);
    auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
    MTCode whole(sh, {{Poly::one(F5), Poly::one(F5)}});
    CHECK(whole.rank() == 6);
    CHECK(dual_code(whole).rank() == 0);
    CHECK(dual_closed_form(whole).rank() == 0);
}

TEST_CASE("self-dual existence clauses") {
    const Field* F2 = Field::make(2, 1);
    CHECK(self_dual_exists(*Spectrum::build(F2, {{3, F2->one()}, {3, F2->one()}})).exists);
    const Field* F5 = Field::make(5, 1);
    auto s1 = self_dual_exists(*Spectrum::build(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}}));
    CHECK_FALSE(s1.exists);
    CHECK(s1.failed_clause.find("tau = 0") != std::string::npos);
    // self-pairing slots with compatible isotropic lines support self-dual
    // codes even without reciprocal mates (enumeration finds exactly two)
    CHECK(self_dual_exists(*Spectrum::build(F5, {{3, F5->from_int(3)}, {3, F5->from_int(3)}}))
              .exists);
    // odd-support unpaired factor blocks existence
    auto s2 = self_dual_exists(*Spectrum::build(F5, {{3, F5->from_int(2)}}));
    CHECK_FALSE(s2.exists);
    // n odd through a mismatched pair support
    auto s3 = self_dual_exists(
        *Spectrum::build(F5, {{1, F5->from_int(2)}, {2, F5->from_int(4)}}));
    CHECK_FALSE(s3.exists);
    CHECK(s3.failed_clause.find("incidence rows") != std::string::npos);
}

TEST_CASE("duality property suite") {
    auto r = selftest::duality_suite(7);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("lcd consistency sweep") {
    auto r = selftest::lcd_consistency_suite();
    INFO(r.detail);
    CHECK(r.pass);
}
