#include "mtx/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mtx {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly::Poly(const Field* f, std::vector<FieldElement> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        require(c.field_ptr() == f, "Poly: coefficient from another field");
    trim();
}

Poly Poly::one(const Field* f) { return Poly(f, {f->one()}); }

Poly Poly::x(const Field* f) { return Poly(f, {f->zero(), f->one()}); }

Poly Poly::constant(const FieldElement& c) {
    return Poly(&c.field(), {c});
}

Poly Poly::binomial(const Field* f, unsigned m, const FieldElement& lambda) {
    std::vector<FieldElement> cs(m + 1, f->zero());
    cs[0] = f->neg(lambda);
    cs[m] = f->one();
    return Poly(f, std::move(cs));
}

FieldElement Poly::coeff(size_t i) const {
    require(field_ != nullptr, "Poly: uninitialized");
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

FieldElement Poly::lead() const {
    require(!is_zero(), "Poly::lead: zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    require(field_ == o.field_, "poly add: field mismatch");
    std::vector<FieldElement> cs(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) + o.coeff(i);
    return Poly(field_, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
    require(field_ == o.field_, "poly sub: field mismatch");
    std::vector<FieldElement> cs(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) - o.coeff(i);
    return Poly(field_, std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
    require(field_ == o.field_, "poly mul: field mismatch");
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<FieldElement> cs(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] = cs[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return Poly(field_, std::move(cs));
}

Poly Poly::operator*(const FieldElement& c) const {
    std::vector<FieldElement> cs = coeffs_;
    for (auto& v : cs) v = v * c;
    return Poly(field_, std::move(cs));
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    require(field_ == d.field_, "poly divrem: field mismatch");
    require(!d.is_zero(), "poly divrem: division by zero polynomial");
    Poly rem = *this;
    if (degree() < d.degree()) return {Poly(field_), rem};
    std::vector<FieldElement> q(static_cast<size_t>(degree() - d.degree()) + 1, field_->zero());
    const FieldElement lead_inv = field_->inv(d.lead());
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const size_t shift = static_cast<size_t>(rem.degree() - d.degree());
        const FieldElement c = rem.lead() * lead_inv;
        q[shift] = c;
        std::vector<FieldElement> sub(shift, field_->zero());
        sub.insert(sub.end(), d.coeffs_.begin(), d.coeffs_.end());
        rem = rem - Poly(field_, std::move(sub)) * c;
    }
    return {Poly(field_, std::move(q)), rem};
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divrem(*this).second.is_zero();
}

Poly Poly::monic() const {
    require(!is_zero(), "monic: zero polynomial");
    if (is_monic()) return *this;
    return *this * field_->inv(lead());
}

FieldElement Poly::eval(const FieldElement& at) const {
    require(at.field_ptr() == field_, "poly eval: field mismatch (use eval_ext)");
    FieldElement acc = field_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
}

FieldElement Poly::eval_ext(const FieldElement& at, const SubfieldMap& emb) const {
    require(emb.base() == field_, "poly eval_ext: embedding base mismatch");
    const Field* ext = emb.ext();
    require(at.field_ptr() == ext, "poly eval_ext: point not in extension");
    FieldElement acc = ext->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + emb.up(coeffs_[i]);
    return acc;
}

std::string Poly::encode() const {
    if (is_zero()) return field_->encode(field_->zero());
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ' ';
        s += field_->encode(coeffs_[i]);
    }
    return s;
}

Poly Poly::decode(const Field* f, const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<FieldElement> cs;
    while (is >> tok) cs.push_back(f->decode(tok));
    require(!cs.empty(), "poly decode: empty encoding");
    return Poly(f, std::move(cs));
}

std::string Poly::pretty() const {
    if (is_zero()) return "0";
    const bool prime = field_->is_prime_field();
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs = field_->encode(coeffs_[i]);
        if (!prime) cs = "(" + cs + ")";
        if (i == 0) {
            s += cs;
        } else {
            if (!(coeffs_[i].is_one()))
                s += cs;
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    Poly g = poly_gcd(a, b);
    Poly q = (a * b) / g;
    return q.monic();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) {
    return (a * b) % mod;
}

Poly poly_powmod(const Poly& a, uint64_t e, const Poly& mod) {
    Poly r = Poly::one(a.field()) % mod;
    Poly base = a % mod;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod);
        base = poly_mulmod(base, base, mod);
        e >>= 1;
    }
    return r;
}

Poly reciprocal(const Poly& f) {
    require(!f.is_zero(), "reciprocal: zero polynomial");
    require(!f.constant_term().is_zero(), "reciprocal: zero constant term");
    std::vector<FieldElement> cs(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(cs)).monic();
}

ReciprocalClass reciprocal_class(const Poly& f) {
    require(is_irreducible(f), "reciprocal_class: input must be irreducible");
    require(!f.constant_term().is_zero(), "reciprocal_class: zero constant term");
    return f.monic() == reciprocal(f) ? ReciprocalClass::self_reciprocal
                                      : ReciprocalClass::other;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const Field* F = f.field();
    const uint64_t q = F->order();
    Poly fr = poly_powmod(Poly::x(F), 1, f); // x mod f
    Poly frob = fr;
    for (int j = 1; j <= f.degree() / 2; ++j) {
        frob = poly_powmod(frob, q, f); // x^{q^j} mod f
        Poly g = poly_gcd(frob - fr, f);
        if (g.degree() > 0) return false;
    }
    return true;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const Field* F = a.field();
    for (int i = 0; i <= a.degree(); ++i) {
        uint64_t ia = F->index_of(a.coeff(static_cast<size_t>(i)));
        uint64_t ib = F->index_of(b.coeff(static_cast<size_t>(i)));
        if (ia != ib) return ia < ib;
    }
    return false;
}

namespace {

constexpr uint64_t kDeterministicSplitLimit = uint64_t(1) << 16;

// All monic irreducible factors of g have degree d and g is squarefree;
// split completely. Deterministic when the candidate space is small.
void equal_degree_split(const Poly& g, unsigned d, Rng& rng, bool force_randomized,
                        std::vector<Poly>& out) {
    const Field* F = g.field();
    const uint64_t q = F->order();
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g.monic());
        return;
    }
    uint64_t space = 1;
    bool small = true;
    for (unsigned i = 0; i < d; ++i) {
        if (space > kDeterministicSplitLimit / q) {
            small = false;
            break;
        }
        space *= q;
    }
    if (small && space <= kDeterministicSplitLimit && !force_randomized) {
        // exhaustive divisor search over monic degree-d candidates,
        // canonical enumeration order
        Poly rest = g.monic();
        for (uint64_t idx = 0; idx < space && rest.degree() > 0; ++idx) {
            std::vector<FieldElement> cs;
            uint64_t t = idx;
            for (unsigned i = 0; i < d; ++i) {
                cs.push_back(F->from_index(t % q));
                t /= q;
            }
            cs.push_back(F->one());
            Poly cand(F, std::move(cs));
            auto [quot, rem] = rest.divrem(cand);
            if (rem.is_zero()) {
                out.push_back(cand);
                rest = quot;
            }
        }
        require(rest.degree() == 0, "equal_degree_split: exhaustive search incomplete");
        return;
    }

    // Cantor-Zassenhaus
    Poly h(F);
    while (true) {
        std::vector<FieldElement> cs;
        for (int i = 0; i < g.degree(); ++i) cs.push_back(F->from_index(rng.below(q)));
        Poly r(F, std::move(cs));
        if (r.degree() < 1) continue;
        Poly split(F);
        if (F->characteristic() == 2) {
            // trace polynomial: sum of r^{2^i} over the F_2-dimension of F_{q^d}
            const unsigned bits = F->degree() * d;
            Poly t = r % g, acc = Poly(F);
            for (unsigned i = 0; i < bits; ++i) {
                acc = (acc + t) % g;
                t = poly_mulmod(t, t, g);
            }
            split = poly_gcd(acc, g);
        } else {
            uint64_t e = 1;
            for (unsigned i = 0; i < d; ++i) e *= q;
            Poly t = poly_powmod(r, (e - 1) / 2, g);
            split = poly_gcd(t - Poly::one(F), g);
        }
        if (split.degree() > 0 && split.degree() < g.degree()) {
            equal_degree_split(split, d, rng, force_randomized, out);
            equal_degree_split((g / split).monic(), d, rng, force_randomized, out);
            return;
        }
    }
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly& f, const FactorOptions& opt) {
    const Field* F = f.field();
    require(f.degree() >= 1, "factor: degree must be >= 1");
    require(f.degree() <= 512, "factor: degree above supported limit 512");
    Rng rng(opt.seed);
    std::vector<Poly> out;
    Poly rest = f.monic();
    // distinct-degree splitting
    Poly frob = Poly::x(F) % rest;
    unsigned d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (static_cast<int>(2 * d) > rest.degree()) {
            out.push_back(rest.monic());
            break;
        }
        frob = poly_powmod(frob, F->order(), rest);
        Poly g = poly_gcd(frob - (Poly::x(F) % rest), rest);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, opt.force_randomized, out);
            rest = (rest / g).monic();
            frob = frob % rest;
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<Poly> factor_binomial(const Field* f, unsigned m, const FieldElement& lambda,
                                  const FactorOptions& opt) {
    require(m >= 1, "factor_binomial: m must be positive");
    require(m % f->characteristic() != 0,
            "factor_binomial: gcd(m, q) != 1 (repeated roots unsupported)");
    require(!lambda.is_zero(), "factor_binomial: lambda must be nonzero");
    return factor_squarefree(Poly::binomial(f, m, lambda), opt);
}

} // namespace mtx
