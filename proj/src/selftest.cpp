#include "mtx/selftest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mtx/bounds.hpp"
#include "mtx/census.hpp"
#include "mtx/concat.hpp"
#include "mtx/duality.hpp"
#include "mtx/io.hpp"
#include "mtx/sweep.hpp"

namespace mtx::selftest {

namespace {

/// Failure accumulator: counts checks, keeps the first failure message.
struct Check {
    size_t checks = 0;
    size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& msg) {
        ++checks;
        if (!ok) {
            ++failures;
            if (first.empty()) first = msg;
        }
    }
    SuiteResult result(const std::string& name, const std::string& extra = "") const {
        SuiteResult r;
        r.name = name;
        r.pass = failures == 0;
        std::ostringstream os;
        os << checks << " checks";
        if (!extra.empty()) os << ", " << extra;
        if (failures) os << ", " << failures << " FAILED, first: " << first;
        r.detail = os.str();
        return r;
    }
};

FieldElement random_elem(const Field* f, Rng& rng) { return f->from_index(rng.below(f->order())); }


Poly random_poly(const Field* f, unsigned max_deg, Rng& rng) {
    std::vector<FieldElement> cs;
    for (unsigned i = 0; i <= max_deg; ++i) cs.push_back(random_elem(f, rng));
    return Poly(f, std::move(cs));
}

struct ParamSet {
    const Field* field;
    std::vector<Block> blocks;
};

std::vector<ParamSet> standard_sets() {
    const Field* F2 = Field::make(2, 1);
    const Field* F3 = Field::make(3, 1);
    const Field* F4 = Field::make(2, 2);
    const Field* F5 = Field::make(5, 1);
    const Field* F7 = Field::make(7, 1);
    FieldElement w = F4->gen(); // root of x^2+x+1
    return {
        {F2, {{3, F2->one()}, {3, F2->one()}}},
        {F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}}},
        {F3, {{2, F3->one()}, {4, F3->from_int(2)}}},
        {F4, {{3, F4->one()}, {1, w}}},
        {F4, {{5, w}, {3, w * w}}},
        {F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}}},
        {F5, {{3, F5->from_int(3)}, {3, F5->from_int(3)}}},
        {F5, {{1, F5->from_int(2)}, {1, F5->from_int(2)}}},
        {F7, {{2, F7->from_int(2)}, {4, F7->from_int(4)}}},
    };
}

MTCode random_code(const SpectrumPtr& spec, const ShapePtr& shape, Rng& rng) {
    const size_t rho = 1 + rng.below(2);
    std::vector<std::vector<Poly>> gens;
    for (size_t k = 0; k < rho; ++k) {
        std::vector<Poly> tuple;
        for (const Block& b : shape->blocks())
            tuple.push_back(random_poly(shape->field(), b.m - 1, rng));
        gens.push_back(std::move(tuple));
    }
    return MTCode(spec, shape, std::move(gens));
}

Codeword random_word(const ShapePtr& shape, Rng& rng) {
    std::vector<FieldElement> v;
    for (size_t i = 0; i < shape->length(); ++i) v.push_back(random_elem(shape->field(), rng));
    return Codeword(shape, std::move(v));
}

Codeword random_codeword_in(const MTCode& c, Rng& rng) {
    const FqMat& span = c.span_matrix();
    const Field* F = c.field();
    std::vector<uint32_t> acc(c.length(), 0);
    const FieldOps& ops = F->ops();
    for (size_t r = 0; r < span.nrows(); ++r) {
        uint32_t coef = static_cast<uint32_t>(rng.below(F->order()));
        for (size_t j = 0; j < acc.size(); ++j)
            acc[j] = ops.add(acc[j], ops.mul(coef, span.rows[r][j]));
    }
    return Codeword::from_indices(c.shape(), acc);
}

} // namespace

// --- fields -----------------------------------------------------------------

SuiteResult field_suite(uint64_t seed) {
    Rng rng(seed ^ 0xf1e1d); // suite-local stream
    Check ck;
    std::vector<const Field*> fields = {
        Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1),
        Field::make(7, 1), Field::make(2, 3), Field::make(3, 2), Field::make(5, 2),
        Field::make(7, 2),
    };
    for (const Field* F : fields) {
        for (int it = 0; it < 1000; ++it) {
            FieldElement a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
            ck.expect((a + b) + c == a + (b + c), "field add assoc");
            ck.expect((a * b) * c == a * (b * c), "field mul assoc");
            ck.expect(a * (b + c) == a * b + a * c, "field distributivity");
            ck.expect(a + (-a) == F->zero(), "field additive inverse");
            ck.expect(a * b == b * a, "field commutativity");
            if (!a.is_zero()) ck.expect(a * a.inverse() == F->one(), "field inverse");
        }
        // multiplicative order: brute agreement on small fields
        if (F->order() <= 64) {
            for (uint64_t i = 1; i < F->order(); ++i) {
                FieldElement x = F->from_index(i);
                uint64_t t = 1;
                FieldElement cur = x;
                while (!cur.is_one()) {
                    cur = cur * x;
                    ++t;
                }
                ck.expect(F->mult_order(x) == t, "mult_order brute mismatch");
                ck.expect((F->order() - 1) % t == 0, "order does not divide q-1");
            }
        }
        // squarity: exhaustive check on small fields
        if (F->order() <= 121) {
            std::set<uint64_t> squares;
            for (uint64_t i = 0; i < F->order(); ++i) {
                FieldElement x = F->from_index(i);
                squares.insert(F->index_of(x * x));
            }
            for (uint64_t i = 0; i < F->order(); ++i) {
                FieldElement x = F->from_index(i);
                ck.expect(F->is_square(x) == (squares.count(i) > 0), "is_square mismatch");
            }
        }
    }
    // traces across towers, including a non-prime base
    struct Tow {
        const Field* base;
        const Field* ext;
    };
    std::vector<Tow> towers = {
        {Field::make(2, 1), Field::make(2, 2)}, {Field::make(2, 1), Field::make(2, 3)},
        {Field::make(7, 1), Field::make(7, 2)}, {Field::make(2, 2), Field::make(2, 4)},
        {Field::make(3, 1), Field::make(3, 2)}, {Field::make(2, 2), Field::make(2, 6)},
    };
    for (const auto& tw : towers) {
        SubfieldMap emb(tw.base, tw.ext);
        std::set<uint64_t> image;
        for (int it = 0; it < 300; ++it) {
            FieldElement x = random_elem(tw.ext, rng), y = random_elem(tw.ext, rng);
            FieldElement a = random_elem(tw.base, rng);
            ck.expect(emb.trace(x + y) == emb.trace(x) + emb.trace(y), "trace additivity");
            ck.expect(emb.trace(emb.up(a) * x) == a * emb.trace(x), "trace base-linearity");
            ck.expect(emb.trace(tw.ext->pow(x, tw.base->order())) == emb.trace(x),
                      "trace Frobenius invariance");
            image.insert(tw.base->index_of(emb.trace(x)));
        }
        // surjectivity: scan the whole extension for the missing values
        for (uint64_t i = 0; i < tw.ext->order() && image.size() < tw.base->order(); ++i)
            image.insert(tw.base->index_of(emb.trace(tw.ext->from_index(i))));
        ck.expect(image.size() == tw.base->order(), "trace not surjective");
        ck.expect(emb.trace(tw.ext->zero()).is_zero(), "trace of zero");
    }
    // pinned values
    {
        const Field* F4 = Field::make(2, 2);
        SubfieldMap e42(Field::make(2, 1), F4);
        ck.expect(e42.trace(F4->gen()).is_one(), "Tr_{F4/F2}(a) != 1");
        const Field* F49 = Field::make(7, 2);
        SubfieldMap e497(Field::make(7, 1), F49);
        ck.expect(e497.trace(F49->one()) == Field::make(7, 1)->from_int(2), "Tr_{F49/F7}(1) != 2");
        const Field* F7 = Field::make(7, 1);
        ck.expect(F7->inv(F7->from_int(3)) == F7->from_int(5), "inv(3) != 5 in F7");
        ck.expect(F7->mult_order(F7->from_int(3)) == 6, "ord(3) != 6 in F7");
        const Field* F5 = Field::make(5, 1);
        ck.expect(F5->mult_order(F5->from_int(2)) == 4, "ord(2) != 4 in F5");
        ck.expect(F5->is_square(F5->from_int(4)), "-1 not square in F5");
        const Field* F3 = Field::make(3, 1);
        ck.expect(!F3->is_square(F3->from_int(2)), "-1 square in F3");
    }
    return ck.result("field-axioms");
}

// --- polynomials -------------------------------------------------------------

SuiteResult poly_suite(uint64_t seed) {
    Rng rng(seed ^ 0x901f);
    Check ck;
    struct Bin {
        const Field* f;
        unsigned m;
    };
    std::vector<const Field*> flds = {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2),
                                      Field::make(5, 1), Field::make(7, 1)};
    for (const Field* F : flds) {
        for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 7u}) {
            if (m % F->characteristic() == 0) continue;
            for (uint64_t li = 1; li < std::min<uint64_t>(F->order(), 6); ++li) {
                FieldElement lam = F->from_index(li);
                auto factors = factor_binomial(F, m, lam);
                Poly prod = Poly::one(F);
                for (const Poly& g : factors) {
                    prod = prod * g;
                    ck.expect(is_irreducible(g), "factor fails independent irreducibility");
                    ck.expect(g.is_monic(), "factor not monic");
                }
                ck.expect(prod == Poly::binomial(F, m, lam), "factor product mismatch");
                ck.expect(std::is_sorted(factors.begin(), factors.end(), poly_less),
                          "factors not canonically sorted");
                for (const Poly& g : factors) {
                    Poly gs = reciprocal(g);
                    ck.expect(reciprocal(gs) == g.monic(), "reciprocal not involutive");
                    ck.expect(is_irreducible(gs), "reciprocal of irreducible not irreducible");
                    ck.expect(gs.degree() == g.degree(), "reciprocal changes degree");
                }
            }
        }
        for (int it = 0; it < 100; ++it) {
            Poly a = random_poly(F, 4, rng), b = random_poly(F, 4, rng);
            if (a.is_zero() || b.is_zero()) continue;
            Poly g = poly_gcd(a, b), l = poly_lcm(a, b);
            ck.expect((g * l).monic() == (a * b).monic(), "gcd*lcm != monic product");
            auto [qq, rr] = a.divrem(b);
            ck.expect(qq * b + rr == a, "divrem identity");
            ck.expect(rr.degree() < b.degree(), "divrem remainder degree");
        }
    }
    // deterministic vs randomized equal-degree splitting agree
    {
        const Field* F2 = Field::make(2, 1);
        FactorOptions det, rnd;
        rnd.seed = seed + 7;
        rnd.force_randomized = true;
        auto a = factor_binomial(F2, 15, F2->one(), det);
        auto b = factor_binomial(F2, 15, F2->one(), rnd);
        ck.expect(a == b, "randomized factorization differs from deterministic");
        const Field* F3 = Field::make(3, 1);
        auto c = factor_binomial(F3, 8, F3->from_int(2), det);
        auto d = factor_binomial(F3, 8, F3->from_int(2), rnd);
        ck.expect(c == d, "randomized factorization differs (F3)");
    }
    // pinned examples
    {
        const Field* F5 = Field::make(5, 1);
        Poly xm2 = Poly::decode(F5, "3 1"); // x+3 = x-2
        ck.expect(reciprocal(xm2) == Poly::decode(F5, "2 1"), "(x-2)* != x-3");
        Poly q = Poly::decode(F5, "4 2 1");
        ck.expect(reciprocal(q) == Poly::decode(F5, "4 3 1"), "(x^2+2x+4)* mismatch");
        const Field* F2 = Field::make(2, 1);
        ck.expect(reciprocal_class(Poly::decode(F2, "1 1")) == ReciprocalClass::self_reciprocal,
                  "x+1 class");
        ck.expect(reciprocal_class(xm2) == ReciprocalClass::other, "x-2 class");
        ck.expect(reciprocal_class(Poly::decode(F2, "1 1 1")) == ReciprocalClass::self_reciprocal,
                  "x^2+x+1 class");
        // eval in an extension: x^2+x+1 has the F4 generator as a root
        const Field* F4 = Field::make(2, 2);
        SubfieldMap emb(F2, F4);
        ck.expect(Poly::decode(F2, "1 1 1").eval_ext(F4->gen(), emb).is_zero(),
                  "x^2+x+1 at F4 generator");
        // gcd example over F5
        ck.expect(poly_gcd(xm2, Poly::binomial(F5, 3, F5->from_int(3))) == xm2.monic(),
                  "gcd(x+3, x^3-3)");
    }
    return ck.result("poly-ring");
}

// --- spectrum ---------------------------------------------------------------

SuiteResult spectrum_suite(uint64_t seed) {
    (void)seed;
    Check ck;
    for (const ParamSet& ps : standard_sets()) {
        auto spec = Spectrum::build(ps.field, ps.blocks);
        const Field* F = ps.field;
        // reconstruction of every block modulus
        for (size_t i = 0; i < spec->ell(); ++i) {
            Poly prod = Poly::one(F);
            for (const FactorInfo& fi : spec->factors())
                if (fi.eps[i]) prod = prod * fi.g;
            ck.expect(prod == spec->block_modulus(i), "block modulus reconstruction");
        }
        // pairing involution and tau symmetry
        for (size_t v = spec->s(); v < spec->t(); ++v) {
            const FactorInfo& lead = spec->factor(v);
            const FactorInfo& mate = spec->factor(static_cast<size_t>(lead.partner));
            ck.expect(reciprocal(lead.g) == mate.g, "pair partner is not the reciprocal");
            ck.expect(mate.partner == static_cast<int>(v), "partner link not involutive");
            ck.expect(lead.tau == mate.tau, "pair tau mismatch");
            ck.expect(!(lead.g == mate.g), "pair lead equals partner");
        }
        for (size_t u = 0; u < spec->s(); ++u)
            ck.expect(reciprocal(spec->factor(u).g) == spec->factor(u).g,
                      "self-reciprocal factor fails g = g*");
        // alpha_w roots and lambda images
        for (size_t w = 0; w < spec->factor_count(); ++w) {
            const FactorInfo& fi = spec->factor(w);
            const SubfieldMap& emb = spec->embedding(w);
            ck.expect(fi.g.eval_ext(fi.alpha, emb).is_zero(), "alpha_w is not a root");
            for (size_t i = 0; i < spec->ell(); ++i) {
                if (!fi.eps[i]) continue;
                FieldElement ap = fi.constituent_field->pow(fi.alpha, spec->blocks()[i].m);
                ck.expect(ap == emb.up(spec->blocks()[i].lambda), "alpha^m != lambda");
            }
            ck.expect(fi.eps_sum >= 1, "retained factor with empty incidence");
        }
        // x^m - 1 divisible by every block modulus
        Poly xm1 = Poly::binomial(F, static_cast<unsigned>(spec->exponent()), F->one());
        for (size_t i = 0; i < spec->ell(); ++i)
            ck.expect(spec->block_modulus(i).divides(xm1), "x^m - 1 not divisible by block");
    }
    // lambda = 1 specialization: factor degrees match cyclotomic coset sizes
    for (const Field* F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
        for (unsigned m : {3u, 5u, 7u}) {
            if (m % F->characteristic() == 0) continue;
            auto spec = Spectrum::build(F, {{m, F->one()}});
            std::multiset<unsigned> expect;
            std::vector<bool> seen(m, false);
            for (unsigned j = 0; j < m; ++j) {
                if (seen[j]) continue;
                unsigned size = 0;
                uint64_t cur = j;
                do {
                    seen[cur] = true;
                    ++size;
                    cur = cur * F->order() % m;
                } while (cur != j);
                expect.insert(size);
            }
            std::multiset<unsigned> got;
            for (const FactorInfo& fi : spec->factors()) got.insert(fi.degree);
            ck.expect(expect == got, "cyclotomic coset degrees mismatch");
        }
    }
    // pinned spectra
    {
        const Field* F2 = Field::make(2, 1);
        auto s3 = Spectrum::build(F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}});
        ck.expect(s3->factor_count() == 5 && s3->s() == 3 && s3->t() == 4 && s3->e() == 4,
                  "example spectrum classification");
        ck.expect(s3->factor(0).g == Poly::decode(F2, "1 1") && s3->factor(0).eps_sum == 3,
                  "x+1 incidence");
        ck.expect(s3->exponent() == 105, "exponent lcm(3,5,7)");
        const Field* F5 = Field::make(5, 1);
        auto s58 = Spectrum::build(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
        ck.expect(s58->s() == 0 && s58->t() == 2 && s58->e() == 2, "5.8 spectrum classes");
        ck.expect(s58->factor(s58->s()).tau == 0, "5.8 tau");
        ck.expect(s58->exponent() == 12, "5.8 exponent");
        auto s510 = Spectrum::build(F5, {{3, F5->from_int(3)}, {3, F5->from_int(3)}});
        ck.expect(s510->s() == 0 && s510->t() == 0 && s510->e() == 2, "5.10 spectrum classes");
        const Field* F7 = Field::make(7, 1);
        auto s6 = Spectrum::build(F7, {{2, F7->from_int(2)}, {4, F7->from_int(4)}});
        ck.expect(s6->exponent() == 12, "F7 exponent lcm(6,12)");
    }
    return ck.result("spectrum");
}

// --- mt-core -----------------------------------------------------------------

SuiteResult mtcore_suite(uint64_t seed) {
    Rng rng(seed ^ 0x3c0de);
    Check ck;
    for (const ParamSet& ps : standard_sets()) {
        auto spec = Spectrum::build(ps.field, ps.blocks);
        auto shape = ModuleShape::make(ps.field, ps.blocks);
        for (int it = 0; it < 100; ++it) {
            MTCode c = random_code(spec, shape, rng);
            size_t dim = 0;
            try {
                dim = c.dimension(); // internally cross-checks rank vs constituents
            } catch (const MtxError& e) {
                ck.expect(false, std::string("dimension cross-check: ") + e.what());
                continue;
            }
            ck.expect(dim == c.rank(), "dimension != rank");
            // T_Λ-closure of the span basis
            const FqMat& span = c.span_matrix();
            std::vector<uint32_t> sh;
            for (size_t r = 0; r < span.nrows(); ++r) {
                lambda_shift_row(*shape, span.rows[r], sh);
                std::vector<uint32_t> probe = sh;
                ck.expect(reduce_row(span, c.span_pivots(), probe), "span not shift-closed");
            }
            // membership of generators and their shifts
            for (size_t k = 0; k < c.rho(); ++k) {
                ck.expect(c.contains(c.generator_word(k)), "generator not contained");
                ck.expect(c.contains(lambda_shift(c.generator_word(k))),
                          "shifted generator not contained");
            }
            // parity check annihilates; maximal proper divisors do not
            Poly h = c.parity_check();
            bool all_zero = true;
            for (size_t k = 0; k < c.rho(); ++k) {
                Codeword img = module_action(h, c.generator_word(k));
                if (!img.is_zero()) all_zero = false;
            }
            ck.expect(all_zero, "parity check does not annihilate");
            if (h.degree() > 0) {
                auto hf = factor_squarefree(h);
                for (const Poly& g : hf) {
                    Poly hp = h / g;
                    bool kills_all = true;
                    for (size_t k = 0; k < c.rho(); ++k)
                        if (!module_action(hp, c.generator_word(k)).is_zero()) kills_all = false;
                    ck.expect(!kills_all, "parity check not minimal");
                }
            }
            if (c.rho() == 1)
                ck.expect(dim == static_cast<size_t>(h.degree()),
                          "one-generator dimension != deg h");
        }
        // T^m = I on random words
        auto one_word = [&](Rng& r) { return random_word(shape, r); };
        for (int it = 0; it < 100; ++it) {
            Codeword wd = one_word(rng);
            Codeword cur = wd;
            for (uint64_t j = 0; j < spec->exponent(); ++j) cur = lambda_shift(cur);
            ck.expect(cur == wd, "shift order does not divide exponent");
        }
        // constituents from original generators equal those from the echelon basis
        for (int it = 0; it < 20; ++it) {
            MTCode c = random_code(spec, shape, rng);
            auto a = c.constituents();
            auto b = constituents_of_rows(spec, c.span_matrix());
            bool same = a.size() == b.size();
            for (size_t w = 0; same && w < a.size(); ++w)
                same = same_rowspace(a[w].basis, b[w].basis);
            ck.expect(same, "constituents differ between generators and echelon basis");
        }
        // membership negative: when dim < n some standard vector is outside
        {
            MTCode c = random_code(spec, shape, rng);
            if (c.rank() < c.length()) {
                bool found_outside = false;
                for (size_t j = 0; j < c.length() && !found_outside; ++j) {
                    std::vector<uint32_t> e(c.length(), 0);
                    e[j] = 1;
                    if (!c.contains(Codeword::from_indices(shape, e))) found_outside = true;
                }
                ck.expect(found_outside, "proper code contains all unit vectors");
            }
        }
        // round trip through constituents
        ConcatContext ctx(spec);
        for (int it = 0; it < 20; ++it) {
            MTCode c = random_code(spec, shape, rng);
            MTCode r = build_from_constituents(ctx, c.constituents());
            ck.expect(same_rowspace(r.span_matrix(), c.span_matrix()),
                      "constituent round trip changed the code");
        }
    }
    // distinct-code count for tiny parameters: q=2, blocks (3,1),(3,1)
    {
        const Field* F2 = Field::make(2, 1);
        auto spec = Spectrum::build(F2, {{3, F2->one()}, {3, F2->one()}});
        std::set<std::string> sigs;
        size_t tuples = 0;
        sweep_all_codes(spec, [&](const std::vector<ConstituentCode>&, const MTCode& code) {
            ++tuples;
            sigs.insert(rowspace_signature(code.span_matrix()));
        });
        BigUint predicted = count_all(*spec);
        ck.expect(predicted == BigUint(35), "N formula for (3,1),(3,1)");
        ck.expect(tuples == 35, "tuple sweep size");
        ck.expect(sigs.size() == 35, "distinct codes != N");
    }
    return ck.result("mt-core");
}

// --- duality ------------------------------------------------------------------

SuiteResult duality_suite(uint64_t seed) {
    Rng rng(seed ^ 0xd0a1);
    Check ck;
    for (const ParamSet& ps : standard_sets()) {
        auto spec = Spectrum::build(ps.field, ps.blocks);
        auto shape = ModuleShape::make(ps.field, ps.blocks);
        auto dual_blocks = shape->dual_shape()->blocks();
        auto dual_spec = Spectrum::build(ps.field, dual_blocks);
        const Field* F = ps.field;
        const bool coprime = blocks_pairwise_coprime(*shape);
        for (int it = 0; it < 100; ++it) {
            MTCode c = random_code(spec, shape, rng);
            MTCode d = dual_code(c, dual_spec);
            ck.expect(c.rank() + d.rank() == c.length(), "dim C + dim dual != n");
            // double dual returns to the original row space with original twists
            MTCode dd = dual_code(d, spec);
            ck.expect(dd.shape()->same(*shape), "double dual twists changed");
            ck.expect(same_rowspace(dd.span_matrix(), c.span_matrix()), "double dual row space");
            // membership in the dual through the product form
            if (d.rank() > 0) {
                Codeword b = random_codeword_in(d, rng);
                bool zero_form = true;
                for (size_t k = 0; k < c.rho(); ++k)
                    if (!form_product(spec, c.generator_word(k), b).is_zero()) zero_form = false;
                ck.expect(zero_form, "form does not vanish on the dual");
            }
            if (coprime) {
                MTCode dc = dual_closed_form(c, dual_spec);
                ck.expect(same_rowspace(dc.span_matrix(), d.span_matrix()),
                          "closed-form dual != nullspace dual");
            }
            // constituents of the dual are slotwise pairing complements
            const auto& dual_cons = d.constituents();
            for (size_t w = 0; w < spec->factor_count(); ++w) {
                ConstituentCode want =
                    expected_dual_constituent(*spec, *dual_spec, w, c.constituents()[w]);
                const ConstituentCode& got = dual_cons[want.w];
                ck.expect(same_rowspace(want.basis, got.basis),
                          "constituent dual decomposition mismatch");
            }
        }
        // product-form coefficient identities and non-degeneracy on random pairs
        const uint64_t m = spec->exponent();
        auto dshape = shape->dual_shape();
        for (int it = 0; it < 25; ++it) {
            Codeword a = random_word(shape, rng);
            Codeword b = random_word(dshape, rng);
            Poly f = form_product(spec, a, b);
            Codeword tb = b;
            bool ok1 = true, ok2 = true;
            for (uint64_t j = 0; j < m; ++j) {
                if (!(f.coeff(j) == inner_product(a, tb))) ok1 = false;
                tb = lambda_shift(tb);
            }
            Codeword ta = a;
            // coefficient j equals <b, T_Λ^{m-j}(a)>
            std::vector<FieldElement> coeffs(m);
            Codeword cur = a;
            for (uint64_t j = 0; j < m; ++j) {
                // cur = T^j(a); store <b, cur> at m-j mod m
                coeffs[(m - j) % m] = inner_product(b, cur);
                cur = lambda_shift(cur);
            }
            for (uint64_t j = 0; j < m; ++j)
                if (!(f.coeff(j) == coeffs[j])) ok2 = false;
            ck.expect(ok1, "form coefficients != <a, T'(b)> expansion");
            ck.expect(ok2, "form coefficients != <b, T^{m-j}(a)> expansion");
            if (!a.is_zero()) {
                bool witness = false;
                for (size_t j = 0; j < shape->length() && !witness; ++j) {
                    std::vector<uint32_t> e(shape->length(), 0);
                    e[j] = 1;
                    if (!form_product(spec, a, Codeword::from_indices(dshape, e)).is_zero())
                        witness = true;
                }
                ck.expect(witness, "form degenerate: nonzero word pairs to zero with everything");
            }
        }
        // conjugation is an involution blockwise
        for (size_t i = 0; i < shape->ell(); ++i) {
            const Block& blk = shape->blocks()[i];
            for (int it = 0; it < 20; ++it) {
                Poly b = random_poly(F, blk.m - 1, rng);
                Poly once = conjugate_into(b, blk.m, blk.lambda);
                Poly twice = conjugate_into(once, blk.m, F->inv(blk.lambda));
                ck.expect(twice == b % shape->block_modulus(i), "conjugation not involutive");
            }
        }
    }
    // pinned conjugation value: x over F5 (m=3, codomain twist 3) -> 2x^2
    {
        const Field* F5 = Field::make(5, 1);
        Poly x = Poly::x(F5);
        Poly c = conjugate_into(x, 3, F5->from_int(3));
        ck.expect(c == Poly::decode(F5, "0 0 2"), "conjugate of x mismatch");
    }
    return ck.result("duality");
}

// --- concat / trace -----------------------------------------------------------

SuiteResult concat_suite(uint64_t seed) {
    Rng rng(seed ^ 0xc0ca);
    Check ck;
    for (const ParamSet& ps : standard_sets()) {
        auto spec = Spectrum::build(ps.field, ps.blocks);
        auto shape = ModuleShape::make(ps.field, ps.blocks);
        ConcatContext ctx(spec);
        const Field* F = ps.field;
        const size_t r = spec->factor_count();
        // idempotent algebra: Θ_w ⊙ Θ_w = Θ_w, Θ_w ⊙ Θ_w' = 0, Σ Θ_w = 1_V
        std::vector<Codeword> thetas;
        for (size_t w = 0; w < r; ++w) thetas.push_back(ctx.idempotent_word(w));
        Codeword sum = Codeword::zero(shape);
        for (size_t w = 0; w < r; ++w) {
            sum = sum + thetas[w];
            for (size_t w2 = 0; w2 < r; ++w2) {
                std::vector<Poly> probemul;
                bool ok = true;
                for (size_t i = 0; i < spec->ell(); ++i) {
                    Poly prod = block_action(*shape, i, thetas[w].block_poly(i),
                                             thetas[w2].block_poly(i));
                    Poly expect = (w == w2) ? thetas[w].block_poly(i) : Poly(F);
                    if (!(prod == expect)) ok = false;
                }
                ck.expect(ok, w == w2 ? "theta not idempotent" : "theta products not orthogonal");
            }
            // <Θ_{w,i}> = <(x^{m_i}-λ_i)/g_w>
            for (size_t i = 0; i < spec->ell(); ++i) {
                if (!spec->factor(w).eps[i]) continue;
                Poly cof = spec->block_modulus(i) / spec->factor(w).g;
                Poly gen = poly_gcd(ctx.idempotent(w, i), spec->block_modulus(i));
                ck.expect(gen == cof.monic(), "idempotent generates the wrong ideal");
            }
        }
        bool sum_is_one = true;
        for (size_t i = 0; i < spec->ell(); ++i)
            if (!sum.block_poly(i).is_one()) sum_is_one = false;
        ck.expect(sum_is_one, "sum of idempotents != 1_V");

        // psi/phi round trips, psi(1) = theta, ring homomorphism property
        for (size_t w = 0; w < r; ++w) {
            const FactorInfo& fi = spec->factor(w);
            const Field* Fw = fi.constituent_field;
            for (size_t i = 0; i < spec->ell(); ++i) {
                if (!fi.eps[i]) continue;
                ck.expect(ctx.psi(w, i, Fw->one()) == ctx.idempotent(w, i), "psi(1) != theta");
                ck.expect(ctx.psi(w, i, Fw->zero()).is_zero(), "psi(0) != 0");
                for (int it = 0; it < 100; ++it) {
                    FieldElement g1 = random_elem(Fw, rng), g2 = random_elem(Fw, rng);
                    Poly p1 = ctx.psi(w, i, g1);
                    ck.expect(ctx.phi(w, i, p1) == g1, "phi(psi) != id");
                    Poly p12 = ctx.psi(w, i, g1 * g2);
                    ck.expect(block_action(*shape, i, p1, ctx.psi(w, i, g2)) == p12,
                              "psi not multiplicative");
                    ck.expect(ctx.psi(w, i, g1 + g2) == p1 + ctx.psi(w, i, g2),
                              "psi not additive");
                }
                // psi(phi(a)) = a on the ideal
                Poly cof = spec->block_modulus(i) / fi.g;
                for (int it = 0; it < 25; ++it) {
                    Poly a = (random_poly(F, fi.degree - 0, rng) * cof) % spec->block_modulus(i);
                    ck.expect(ctx.psi(w, i, ctx.phi(w, i, a)) == a, "psi(phi) != id on ideal");
                }
            }
            // concat of the full constituent space has dimension eps * deg
            ConstituentCode full;
            full.w = w;
            full.field = Fw;
            full.basis = FqMat(Fw, spec->ell());
            for (size_t i = 0; i < spec->ell(); ++i) {
                if (!fi.eps[i]) continue;
                std::vector<uint32_t> row(spec->ell(), 0);
                row[i] = 1;
                full.basis.add_row(std::move(row));
            }
            FqMat rows = concat_code(ctx, w, full);
            ck.expect(rank_of(rows) == fi.eps_sum * fi.degree, "concat of full space dimension");
        }

        // trace description matches the module view on random codes
        for (int it = 0; it < 100; ++it) {
            MTCode c = random_code(spec, shape, rng);
            // random word of C -> its constituent tuple -> trace_codeword returns it
            Codeword cw = random_codeword_in(c, rng);
            std::vector<std::vector<FieldElement>> delta(r);
            for (size_t w = 0; w < r; ++w) {
                const FactorInfo& fi = spec->factor(w);
                for (size_t i = 0; i < spec->ell(); ++i) {
                    if (fi.eps[i])
                        delta[w].push_back(cw.block_poly(i).eval_ext(fi.alpha, spec->embedding(w)));
                    else
                        delta[w].push_back(fi.constituent_field->zero());
                }
            }
            Codeword back = trace_codeword(ctx, delta);
            ck.expect(back == cw, "trace description does not reproduce the codeword");

            // random delta tuple drawn from the constituents stays in C
            std::vector<std::vector<FieldElement>> d2(r);
            for (size_t w = 0; w < r; ++w) {
                const auto& cc = c.constituents()[w];
                const Field* Fw = cc.field;
                std::vector<FieldElement> acc(spec->ell(), Fw->zero());
                for (size_t b = 0; b < cc.basis.nrows(); ++b) {
                    FieldElement coef = random_elem(Fw, rng);
                    for (size_t i = 0; i < spec->ell(); ++i)
                        acc[i] = acc[i] + coef * Fw->from_index(cc.basis.rows[b][i]);
                }
                d2[w] = std::move(acc);
            }
            ck.expect(c.contains(trace_codeword(ctx, d2)), "trace of constituent tuple leaves C");
        }
    }
    return ck.result("trace-concat");
}

// --- census oracle grid ---------------------------------------------------------

SuiteResult census_grid_suite(bool full, std::ostream* progress) {
    Check ck;
    size_t points = 0, codes = 0, mismatched_points = 0;
    std::string mmlist;
    std::vector<uint64_t> qs = full ? std::vector<uint64_t>{2, 3, 4, 5}
                                    : std::vector<uint64_t>{2, 3};
    for (uint64_t q : qs) {
        const Field* F = (q == 4) ? Field::make(2, 2) : Field::make(q, 1);
        // all admissible single blocks
        std::vector<Block> singles;
        const unsigned max_m = full ? 5 : 4;
        for (unsigned m = 1; m <= max_m; ++m) {
            if (m % F->characteristic() == 0) continue;
            for (uint64_t li = 1; li < F->order(); ++li) singles.push_back({m, F->from_index(li)});
        }
        std::vector<std::vector<Block>> param_sets;
        for (const Block& b : singles) param_sets.push_back({b});
        for (const Block& b1 : singles)
            for (const Block& b2 : singles) param_sets.push_back({b1, b2});
        for (const auto& blocks : param_sets) {
            ++points;
            auto spec = Spectrum::build(F, blocks);
            CensusReport closed = census(*spec);
            std::set<std::string> sigs;
            BigUint so(0), sd(0);
            size_t tuples = 0;
            sweep_all_codes(spec, [&](const std::vector<ConstituentCode>&, const MTCode& code) {
                ++tuples;
                sigs.insert(rowspace_signature(code.span_matrix()));
                CodePredicates p = eval_predicates(code, false);
                if (p.self_orthogonal) so += BigUint(1);
                if (p.self_dual) sd += BigUint(1);
            });
            codes += tuples;
            const bool n_ok = closed.total == BigUint(tuples) && sigs.size() == tuples;
            const bool sd_ok = closed.self_dual == sd;
            const bool so_ok = closed.self_orthogonal == so;
            if (!(n_ok && sd_ok && so_ok)) {
                ++mismatched_points;
                if (mismatched_points <= 12) {
                    std::ostringstream os;
                    os << " [q=" << q << " blocks=";
                    for (const Block& b : blocks)
                        os << "(" << b.m << "," << F->encode(b.lambda) << ")";
                    if (!n_ok) os << " N:" << closed.total.to_string() << "!=" << tuples;
                    if (!sd_ok)
                        os << " N0:" << closed.self_dual.to_string() << "!=" << sd.to_string();
                    if (!so_ok)
                        os << " N1:" << closed.self_orthogonal.to_string()
                           << "!=" << so.to_string();
                    os << (closed.self_pairing_slots ? " self-pairing-flagged" : " UNFLAGGED");
                    os << "]";
                    mmlist += os.str();
                }
            }
            ck.expect(n_ok, "total count vs distinct enumeration");
            ck.expect(sd_ok, "self-dual closed form vs enumeration");
            ck.expect(so_ok, "self-orthogonal closed form vs enumeration");
            // monotonicity of the closed forms
            ck.expect(closed.self_dual <= closed.self_orthogonal &&
                          closed.self_orthogonal <= closed.total,
                      "count monotonicity");
            if (progress && points % 50 == 0)
                *progress << "  census grid: " << points << " points, " << codes << " codes swept\n";
        }
    }
    std::ostringstream extra;
    extra << points << " parameter points, " << codes << " codes";
    if (mismatched_points) extra << ", " << mismatched_points << " mismatched points:" << mmlist;
    return ck.result(full ? "census-oracle-grid" : "census-oracle-grid(reduced)", extra.str());
}

SuiteResult census_special_suite() {
    Check ck;
    // derived anchors
    {
        const Field* F2 = Field::make(2, 1);
        auto spec = Spectrum::build(F2, {{3, F2->one()}, {3, F2->one()}});
        ck.expect(count_all(*spec) == BigUint(35), "N anchor");
        ck.expect(count_self_dual(*spec) == BigUint(3), "N0 anchor");
        ck.expect(count_self_orthogonal(*spec) == BigUint(8), "N1 anchor");
        auto s3 = Spectrum::build(F2, {{3, F2->one()}, {5, F2->one()}, {7, F2->one()}});
        ck.expect(count_all(*s3) == BigUint(256), "N anchor (3 blocks)");
        const Field* F5 = Field::make(5, 1);
        auto s58 = Spectrum::build(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
        ck.expect(count_self_dual(*s58).is_zero(), "N0 = 0 for tau = 0");
        ck.expect(count_self_orthogonal(*s58) == BigUint(1), "N1 = 1 for tau = 0");
        // self-pairing unpaired slots: x-2 and its quadratic cofactor divide
        // both blocks while their reciprocals divide neither; each slot has
        // two isotropic lines and two of the four joint selections are
        // compatible, which exhaustive enumeration confirms
        auto s510 = Spectrum::build(F5, {{3, F5->from_int(3)}, {3, F5->from_int(3)}});
        ck.expect(count_self_dual(*s510) == BigUint(2), "N0 for self-pairing slots");
        ck.expect(count_self_orthogonal(*s510) == BigUint(7), "N1 for self-pairing slots");
        ck.expect(census(*s510).self_pairing_slots, "self-pairing spectrum not flagged");
    }
    // q-binomials against exhaustive subspace enumeration
    for (uint64_t q : {2ull, 3ull, 4ull}) {
        const Field* F = (q == 4) ? Field::make(2, 2) : Field::make(q, 1);
        for (size_t k = 0; k <= 3; ++k) {
            std::vector<size_t> by_dim(k + 1, 0);
            size_t total = 0;
            enumerate_subspaces(F, k, [&](const FqMat& m) {
                ++total;
                ++by_dim[m.nrows()];
            });
            for (size_t b = 0; b <= k; ++b)
                ck.expect(BigUint(by_dim[b]) ==
                              q_binomial(static_cast<unsigned>(k), static_cast<unsigned>(b),
                                         BigUint(q)),
                          "q-binomial vs exhaustive subspaces");
            ck.expect(BigUint(total) == num_subspaces(static_cast<unsigned>(k), BigUint(q)),
                      "N(k,Q) vs exhaustive subspaces");
        }
    }
    ck.expect(q_binomial(3, 1, BigUint(2)) == BigUint(7), "[3 1]_2");
    ck.expect(q_binomial(2, 1, BigUint(2)) == BigUint(3), "[2 1]_2");
    ck.expect(q_binomial(1, 2, BigUint(2)).is_zero(), "b > k convention");
    ck.expect(num_subspaces(0, BigUint(9)) == BigUint(1), "N(0,Q)");
    ck.expect(num_subspaces(3, BigUint(2)) == BigUint(16), "N(3,2)");

    // ℓ = 1, λ = 1 specialization: classical cyclic self-orthogonal counts by
    // direct divisor enumeration
    for (uint64_t q : {2ull, 3ull, 5ull}) {
        const Field* F = (q == 4) ? Field::make(2, 2) : Field::make(q, 1);
        for (unsigned m : {3u, 4u, 5u, 7u}) {
            if (m % F->characteristic() == 0) continue;
            auto spec = Spectrum::build(F, {{m, F->one()}});
            auto shape = ModuleShape::make(F, {{m, F->one()}});
            auto factors = factor_binomial(F, m, F->one());
            size_t subsets = size_t(1) << factors.size();
            BigUint so(0);
            BigUint all(0);
            for (size_t mask = 0; mask < subsets; ++mask) {
                Poly g = Poly::one(F);
                for (size_t i = 0; i < factors.size(); ++i)
                    if (mask & (size_t(1) << i)) g = g * factors[i];
                MTCode c(shape, {{g % shape->block_modulus(0)}});
                all += BigUint(1);
                CodePredicates p = eval_predicates(c, false);
                if (p.self_orthogonal) so += BigUint(1);
            }
            ck.expect(all == count_all(*spec), "cyclic divisor count vs N");
            ck.expect(so == count_self_orthogonal(*spec), "cyclic self-orthogonal count");
        }
    }
    return ck.result("census-closed-forms");
}

// --- bounds ---------------------------------------------------------------------

SuiteResult bounds_suite(uint64_t seed) {
    (void)seed;
    Check ck;
    size_t codes = 0;
    // soundness sweep over exhaustive small grids
    struct GridSpec {
        uint64_t q;
        std::vector<std::vector<unsigned>> shapes;
    };
    std::vector<GridSpec> grids = {
        {2, {{3}, {5}, {7}, {3, 3}, {3, 5}, {5, 5}, {3, 7}, {5, 7}}},
        {3, {{2}, {4}, {5}, {2, 2}, {2, 4}, {4, 4}, {2, 5}}},
        {5, {{2}, {3}, {4}, {2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}}},
    };
    for (const auto& grid : grids) {
        const Field* F = Field::make(grid.q, 1);
        for (const auto& ms : grid.shapes) {
            // all twist choices for this block profile
            std::vector<std::vector<Block>> choices(1);
            for (unsigned m : ms) {
                std::vector<std::vector<Block>> next;
                for (const auto& partial : choices)
                    for (uint64_t li = 1; li < F->order(); ++li) {
                        auto cp = partial;
                        cp.push_back({m, F->from_index(li)});
                        next.push_back(std::move(cp));
                    }
                choices = std::move(next);
            }
            for (const auto& blocks : choices) {
                size_t n = 0;
                for (const Block& b : blocks) n += b.m;
                if (n > 12) continue;
                auto spec = Spectrum::build(F, blocks);
                BoundContext bctx(spec);
                sweep_all_codes(spec, [&](const std::vector<ConstituentCode>&, const MTCode& c) {
                    if (c.rank() == 0) return;
                    ++codes;
                    DistanceResult d = min_distance_exact(c, uint64_t(1) << 22);
                    BchReport bch = bch_bound(c, bctx);
                    ConcatBoundReport cb = concat_bound(c, bctx, uint64_t(1) << 22);
                    ck.expect(d.exact, "distance enumeration over budget in grid");
                    ck.expect(bch.bound <= d.distance, "bch bound exceeds the distance");
                    ck.expect(cb.bound <= d.distance, "concat bound exceeds the distance");
                });
            }
        }
    }
    // classical controls
    {
        const Field* F2 = Field::make(2, 1);
        auto sh = ModuleShape::make(F2, {{7, F2->one()}});
        MTCode ham(sh, {{Poly::decode(F2, "1 1 0 1")}});
        ck.expect(bch_bound(ham).bound == 3, "binary [7,4] designed distance");
        ck.expect(min_distance_exact(ham).distance == 3, "binary [7,4] distance");
        // Reed-Solomon controls: zeros xi^1..xi^{d-1}
        struct RS {
            uint64_t p;
            unsigned k;
            unsigned nzeros;
            size_t designed;
        };
        for (const RS& rs : {RS{5, 1, 2, 3}, RS{7, 1, 3, 4}, RS{2, 3, 3, 4}}) {
            const Field* F = Field::make(rs.p, rs.k);
            const unsigned m = static_cast<unsigned>(F->order() - 1);
            // xi = canonical primitive m-th root = first element of order m
            FieldElement xi;
            for (uint64_t i = 1; i < F->order(); ++i) {
                FieldElement cand = F->from_index(i);
                if (F->mult_order(cand) == m) {
                    xi = cand;
                    break;
                }
            }
            Poly g = Poly::one(F);
            FieldElement z = xi;
            for (unsigned j = 0; j < rs.nzeros; ++j) {
                g = g * Poly(F, {F->neg(z), F->one()});
                z = z * xi;
            }
            auto shr = ModuleShape::make(F, {{m, F->one()}});
            MTCode rscode(shr, {{g}});
            ck.expect(bch_bound(rscode).bound == rs.designed, "RS designed distance");
            ck.expect(min_distance_exact(rscode).distance == rs.designed, "RS exact distance");
        }
        // single-constituent concat example: the [7,3] inner code has d = 4
        auto spec7 = Spectrum::build(F2, {{7, F2->one()}});
        ConcatContext ctx7(spec7);
        // factor x^3+x+1: full constituent
        int widx = spec7->index_of_poly(Poly::decode(F2, "1 1 0 1"));
        ck.expect(widx >= 0, "x^3+x+1 not in the m=7 spectrum");
        std::vector<ConstituentCode> parts(spec7->factor_count());
        for (size_t w = 0; w < parts.size(); ++w) {
            parts[w].w = w;
            parts[w].field = spec7->factor(w).constituent_field;
            parts[w].basis = FqMat(parts[w].field, 1);
        }
        std::vector<uint32_t> row{1};
        parts[static_cast<size_t>(widx)].basis.add_row(std::move(row));
        MTCode single = build_from_constituents(ctx7, parts);
        ck.expect(concat_bound(single).bound == 4, "single-constituent concat bound");
        ck.expect(min_distance_exact(single).distance == 4, "minimal ideal distance");
    }
    // bound report invariance under generator permutation
    {
        const Field* F5 = Field::make(5, 1);
        auto sh = ModuleShape::make(F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}});
        MTCode a(sh, {{Poly::decode(F5, "3 1"), Poly::decode(F5, "2 1")},
                      {Poly::decode(F5, "1 1"), Poly::decode(F5, "4 1")}});
        MTCode b(sh, {{Poly::decode(F5, "1 1"), Poly::decode(F5, "4 1")},
                      {Poly::decode(F5, "3 1"), Poly::decode(F5, "2 1")}});
        ck.expect(concat_bound(a).bound == concat_bound(b).bound,
                  "concat bound depends on generator order");
        ck.expect(bch_bound(a).bound == bch_bound(b).bound,
                  "bch bound depends on generator order");
    }
    return ck.result("bounds-soundness", std::to_string(codes) + " nonzero codes swept");
}

// --- the printed trace example ----------------------------------------------------

SuiteResult trace_example_suite(uint64_t seed, unsigned trials) {
    Rng rng(seed ^ 0x77ace);
    Check ck;
    const Field* F7 = Field::make(7, 1);
    auto spec = Spectrum::build(F7, {{2, F7->from_int(2)}, {4, F7->from_int(4)}});
    ConcatContext ctx(spec);
    // canonical factor order must be x+3, x+4, x^2+2
    bool order_ok = spec->factor_count() == 3 &&
                    spec->factor(0).g == Poly::decode(F7, "3 1") &&
                    spec->factor(1).g == Poly::decode(F7, "4 1") &&
                    spec->factor(2).g == Poly::decode(F7, "2 0 1");
    ck.expect(order_ok, "two-block F7 spectrum order");
    if (!order_ok) return ck.result("trace-closed-form");
    const Field* F49 = spec->factor(2).constituent_field;
    const SubfieldMap& emb = spec->embedding(2);
    const FieldElement alpha3 = spec->factor(2).alpha;
    const FieldElement tdown = emb.down(F49->inv(alpha3 * alpha3)); // alpha_3^{-2} lies in F_7
    auto fe = [&](uint64_t v) { return F7->from_int(v); };
    const FieldElement inv2 = F7->inv(fe(2)), inv4 = F7->inv(fe(4));
    for (unsigned it = 0; it < trials; ++it) {
        FieldElement a = random_elem(F7, rng), b = random_elem(F7, rng);
        FieldElement c = random_elem(F7, rng), d = random_elem(F7, rng);
        FieldElement e = random_elem(F7, rng), f = random_elem(F7, rng);
        std::vector<std::vector<FieldElement>> delta = {
            {a, b},
            {c, d},
            {F49->zero(), emb.up(e) + alpha3 * emb.up(f)},
        };
        Codeword got = trace_codeword(ctx, delta);
        std::vector<FieldElement> want = {
            (a + c) * inv2,
            (fe(2) * a + fe(5) * c) * inv2,
            (b + d + fe(2) * e) * inv4,
            (fe(2) * b + fe(5) * d + fe(2) * f) * inv4,
            (fe(4) * b + fe(4) * d + fe(2) * e * tdown) * inv4,
            (b - d + fe(2) * f * tdown) * inv4,
        };
        ck.expect(got.flat() == want, "trace closed form mismatch");
    }
    return ck.result("trace-closed-form", std::to_string(trials) + " random tuples");
}

// --- lcd sweeps -----------------------------------------------------------------

SuiteResult lcd_consistency_suite() {
    Check ck;
    const Field* F5 = Field::make(5, 1);
    const Field* F7 = Field::make(7, 1);
    const Field* F4 = Field::make(2, 2);
    std::vector<ParamSet> sets = {
        {F5, {{3, F5->from_int(3)}, {3, F5->from_int(2)}}},
        {F5, {{3, F5->from_int(3)}, {3, F5->from_int(3)}}},
        {F5, {{1, F5->from_int(2)}, {1, F5->from_int(2)}}},
        {F5, {{2, F5->from_int(2)}, {2, F5->from_int(2)}}},
        {F7, {{2, F7->from_int(2)}, {2, F7->from_int(5)}}},
        {F4, {{3, F4->gen()}, {1, F4->gen()}}},
    };
    size_t codes = 0, degenerate_contradictions = 0;
    for (const ParamSet& ps : sets) {
        auto spec = Spectrum::build(ps.field, ps.blocks);
        const bool degenerate = census(*spec).self_pairing_slots;
        auto dual_spec = Spectrum::build(
            ps.field, ModuleShape::make(ps.field, ps.blocks)->dual_shape()->blocks());
        sweep_all_codes(spec, [&](const std::vector<ConstituentCode>&, const MTCode& c) {
            ++codes;
            MTCode d = dual_code(c, dual_spec);
            DualityFlags fl = duality_flags(c, d);
            LcdVerdict v = lcd_sufficient(c, d, fl);
            if (v.lcd_concluded)
                ck.expect(fl.is_lcd, "sufficiency verdict contradicts duality flags");
            if (v.rule_contradicted) {
                // the stated rules are only sound away from the degenerate
                // unpaired spectra; there they must never be contradicted
                ck.expect(degenerate, "sufficiency rule contradicted on a regular spectrum");
                ++degenerate_contradictions;
            }
            // flag consistency invariants
            if (fl.is_self_dual)
                ck.expect(fl.is_self_orthogonal && fl.is_dual_containing,
                          "self-dual without inclusion flags");
            ck.expect(fl.is_lcd == (fl.dim_intersection == 0), "lcd flag vs intersection");
            if (fl.is_self_orthogonal)
                ck.expect(fl.dim_intersection == c.rank(), "self-orthogonal intersection");
        });
    }
    return ck.result("lcd-consistency",
                     std::to_string(codes) + " codes swept, " +
                         std::to_string(degenerate_contradictions) +
                         " rule contradictions on degenerate spectra");
}

// --- driver ---------------------------------------------------------------------

bool verify(uint64_t seed, std::ostream& out, bool full_grid) {
    out << "verify: seed " << seed << "\n";
    std::vector<SuiteResult> results;
    results.push_back(field_suite(seed));
    results.push_back(poly_suite(seed));
    results.push_back(spectrum_suite(seed));
    results.push_back(mtcore_suite(seed));
    results.push_back(duality_suite(seed));
    results.push_back(concat_suite(seed));
    results.push_back(trace_example_suite(seed, 1000));
    results.push_back(census_special_suite());
    results.push_back(lcd_consistency_suite());
    results.push_back(bounds_suite(seed));
    results.push_back(census_grid_suite(full_grid, nullptr));
    bool all = true;
    for (const auto& r : results) {
        out << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail
            << ")\n";
        all = all && r.pass;
    }
    out << "verify: " << (all ? "all suites passed" : "FAILURES PRESENT") << "\n";
    return all;
}

} // namespace mtx::selftest
