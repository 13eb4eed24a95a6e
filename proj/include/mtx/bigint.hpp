#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mtx {

/// Unsigned arbitrary-precision integer. Only what exact code counting
/// needs: add, subtract (a >= b), multiply, exact/floor division, pow,
/// comparison and decimal conversion.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);

    static BigUint from_decimal(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const; // requires fits_u64()

    std::string to_string() const;

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b); // requires a >= b
    friend BigUint operator*(const BigUint& a, const BigUint& b);
    friend BigUint operator/(const BigUint& a, const BigUint& b);
    friend BigUint operator%(const BigUint& a, const BigUint& b);

    BigUint& operator+=(const BigUint& b) { return *this = *this + b; }
    BigUint& operator-=(const BigUint& b) { return *this = *this - b; }
    BigUint& operator*=(const BigUint& b) { return *this = *this * b; }

    static void divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);

    BigUint pow(uint64_t e) const;

    int cmp(const BigUint& b) const;
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.cmp(b) >= 0; }

private:
    // base 2^32, little-endian, no trailing zero limbs
    std::vector<uint32_t> limbs_;
    void trim();
    static BigUint shift_limbs(const BigUint& a, size_t n);
};

} // namespace mtx
