#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mtx/errors.hpp"

namespace mtx {

class Field;

/// Element of a finite field F_{p^k}: a coefficient vector over the prime
/// field, little-endian in the root of the field modulus. Immutable in
/// practice; all arithmetic returns fresh values.
class FieldElement {
public:
    FieldElement() : field_(nullptr) {}

    const Field& field() const {
        require(field_ != nullptr, "FieldElement: uninitialized element");
        return *field_;
    }
    const Field* field_ptr() const { return field_; }
    const std::vector<uint32_t>& digits() const { return digits_; }

    bool valid() const { return field_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;

private:
    friend class Field;
    FieldElement(const Field* f, std::vector<uint32_t> d)
        : field_(f), digits_(std::move(d)) {}

    const Field* field_;
    std::vector<uint32_t> digits_;
};

/// Index-based arithmetic on a field: elements are identified by their
/// canonical enumeration index (digits little-endian base p). Lookup tables
/// are built for small fields so that linear-algebra sweeps stay cheap.
class FieldOps {
public:
    uint32_t q() const { return q_; }
    uint32_t add(uint32_t a, uint32_t b) const {
        return add_.empty() ? add_slow(a, b) : add_[size_t(a) * q_ + b];
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return mul_.empty() ? mul_slow(a, b) : mul_[size_t(a) * q_ + b];
    }
    uint32_t neg(uint32_t a) const { return neg_.empty() ? neg_slow(a) : neg_[a]; }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

private:
    friend class Field;
    explicit FieldOps(const Field* f);
    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;
    uint32_t neg_slow(uint32_t a) const;

    const Field* f_;
    uint32_t q_;
    std::vector<uint32_t> add_, mul_, neg_, inv_;
};

/// A finite field F_{p^k}. Instances are interned: make() returns the same
/// pointer for the same (p, k, modulus), and the pointer stays valid for the
/// lifetime of the process, so elements carry a plain Field pointer.
class Field {
public:
    /// Field with the canonical modulus: the lexicographically smallest
    /// monic irreducible of degree k over F_p, coefficients compared
    /// low-to-high. Deterministic across runs.
    static const Field* make(uint64_t p, unsigned k);
    /// Field with an explicit monic modulus (degree k, coefficients over
    /// F_p little-endian including the leading 1). Must be irreducible.
    static const Field* make(uint64_t p, unsigned k, const std::vector<uint32_t>& modulus);

    uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    uint64_t order() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    bool is_prime_field() const { return k_ == 1; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of an integer under Z -> F_p -> F_{p^k}.
    FieldElement from_int(uint64_t n) const;
    FieldElement from_digits(std::vector<uint32_t> digits) const;
    /// Canonical element enumeration: index written base p, little-endian.
    FieldElement from_index(uint64_t idx) const;
    uint64_t index_of(const FieldElement& x) const;
    /// Generator root of the modulus (the class of x); zero() in a prime field
    /// has no meaning here, so prime fields return from_int-style generator 1.
    FieldElement gen() const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, uint64_t e) const;

    /// Smallest t >= 1 with x^t = 1; divides q-1.
    uint64_t mult_order(const FieldElement& x) const;
    /// True iff x is a square; always true in characteristic 2.
    bool is_square(const FieldElement& x) const;

    /// Text encoding: prime fields a single integer, extensions the k
    /// prime-subfield digits comma-separated little-endian ("3,1" = 3 + a).
    std::string encode(const FieldElement& x) const;
    FieldElement decode(const std::string& text) const;

    const FieldOps& ops() const;

    bool same(const Field& o) const { return this == &o; }

private:
    Field(uint64_t p, unsigned k, std::vector<uint32_t> modulus);
    std::vector<uint32_t> mul_raw(const std::vector<uint32_t>& a,
                                  const std::vector<uint32_t>& b) const;

    uint64_t p_;
    unsigned k_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;           // k+1 coefficients, monic
    std::vector<std::vector<uint32_t>> xpow_; // x^{k+i} mod modulus, i in [0, k-1)
    mutable std::unique_ptr<FieldOps> ops_;
    mutable std::once_flag ops_once_;

    friend class FieldOps;
};

/// Canonical embedding of a subfield into an extension inside the tower of
/// canonical fields over the same prime: the image of the subfield generator
/// is the first root of the subfield modulus in the extension's canonical
/// element enumeration.
class SubfieldMap {
public:
    SubfieldMap(const Field* base, const Field* ext);

    const Field* base() const { return base_; }
    const Field* ext() const { return ext_; }
    unsigned rel_degree() const { return d_; }

    FieldElement up(const FieldElement& x) const;
    /// Inverse of up(); requires y to lie in the image.
    FieldElement down(const FieldElement& y) const;
    bool in_image(const FieldElement& y) const;

    /// Tr_{ext/base}(y) = sum of y^{q^i}, i < rel_degree, pulled back to base.
    FieldElement trace(const FieldElement& y) const;

private:
    const Field* base_;
    const Field* ext_;
    unsigned d_;
    FieldElement gen_image_;
    std::vector<FieldElement> base_basis_img_; // up(images) of 1, a, ..., a^{k-1}
    // Solver state for down(): columns are prime-field vectors of the images.
    std::vector<std::vector<uint32_t>> solve_cols_;
    std::vector<int> pivot_of_row_;

    std::vector<uint32_t> to_prime_vec(const FieldElement& y) const;
};

/// Coordinates of extension elements in a power basis {g^j : j < d} over an
/// embedded subfield; the workhorse for trace/concat tables and the
/// constituent-level conjugation isomorphisms.
class PowerBasis {
public:
    PowerBasis(const SubfieldMap& emb, const FieldElement& g, unsigned d);

    /// x = sum emb(c_j) g^j; returns (c_0..c_{d-1}) in the base field.
    std::vector<FieldElement> coords(const FieldElement& x) const;
    /// sum emb(c_j) h^j for an alternative generator image h.
    FieldElement eval_at(const std::vector<FieldElement>& c, const FieldElement& h) const;

private:
    const SubfieldMap* emb_;
    FieldElement g_;
    unsigned d_;
    std::vector<FieldElement> basis_; // emb(e_b) * g^j, flattened
    std::vector<std::vector<uint32_t>> solve_cols_;
    std::vector<int> pivot_of_row_;
};

} // namespace mtx
