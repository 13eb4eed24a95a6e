#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtx/field.hpp"
#include "mtx/rng.hpp"

namespace mtx {

/// Univariate polynomial over a Field, little-endian coefficients, trimmed
/// so the leading coefficient is nonzero (the zero polynomial has an empty
/// coefficient vector and degree -1).
class Poly {
public:
    Poly() : field_(nullptr) {}
    explicit Poly(const Field* f) : field_(f) {}
    Poly(const Field* f, std::vector<FieldElement> coeffs);

    static Poly zero(const Field* f) { return Poly(f); }
    static Poly one(const Field* f);
    static Poly x(const Field* f);
    static Poly constant(const FieldElement& c);
    /// x^m - lambda
    static Poly binomial(const Field* f, unsigned m, const FieldElement& lambda);

    const Field* field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
    FieldElement coeff(size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement constant_term() const { return coeff(0); }
    FieldElement lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }
    bool divides(const Poly& other) const; // this | other

    Poly monic() const;

    FieldElement eval(const FieldElement& at) const;
    /// Evaluate at a point of an extension field through an embedding.
    FieldElement eval_ext(const FieldElement& at, const SubfieldMap& emb) const;

    std::string encode() const;
    static Poly decode(const Field* f, const std::string& text);
    /// Human form like "x^2+3x+4" (prime fields) or with bracketed
    /// coefficients for extensions.
    std::string pretty() const;

private:
    const Field* field_;
    std::vector<FieldElement> coeffs_;
    void trim();
};

/// Monic gcd by Euclid's algorithm.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm; gcd(a,b)*lcm(a,b) = monic(a*b).
Poly poly_lcm(const Poly& a, const Poly& b);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly poly_powmod(const Poly& a, uint64_t e, const Poly& mod);

/// Monic normalization of x^{deg f} f(1/x). Requires f != 0 and f(0) != 0.
Poly reciprocal(const Poly& f);

enum class ReciprocalClass { self_reciprocal, other };
/// Classification of an irreducible polynomial; rejects reducible input.
ReciprocalClass reciprocal_class(const Poly& f);

/// Irreducibility via gcd(x^{q^j} - x, f) = 1 for all j <= deg/2.
/// Deliberately a different algorithm from the Rabin test used when
/// constructing field moduli, so the two can cross-check each other.
bool is_irreducible(const Poly& f);

/// Canonical ordering: degree first, then coefficients compared low-to-high
/// by canonical element index.
bool poly_less(const Poly& a, const Poly& b);

struct FactorOptions {
    uint64_t seed = 1;
    /// Force the randomized equal-degree splitter even when the
    /// deterministic exhaustive path would apply (used by tests).
    bool force_randomized = false;
};

/// Complete factorization of the squarefree binomial x^m - lambda into
/// distinct monic irreducibles, canonically sorted. Requires gcd(m, p) = 1
/// and lambda != 0.
std::vector<Poly> factor_binomial(const Field* f, unsigned m, const FieldElement& lambda,
                                  const FactorOptions& opt = {});

/// Factor an arbitrary squarefree monic polynomial (same engine).
std::vector<Poly> factor_squarefree(const Poly& f, const FactorOptions& opt = {});

} // namespace mtx
