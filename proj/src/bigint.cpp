#include "mtx/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtx {

BigUint::BigUint(uint64_t v) {
    if (v) {
        limbs_.push_back(static_cast<uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value too large");
    uint64_t v = 0;
    if (limbs_.size() > 0) v = limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<uint64_t>(limbs_[1]) << 32;
    return v;
}

int BigUint::cmp(const BigUint& b) const {
    if (limbs_.size() != b.limbs_.size())
        return limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != b.limbs_[i]) return limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    const size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (a < b) throw std::underflow_error("BigUint: negative subtraction");
    BigUint r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t s = static_cast<int64_t>(a.limbs_[i]) - borrow;
        if (i < b.limbs_.size()) s -= b.limbs_[i];
        borrow = 0;
        if (s < 0) {
            s += int64_t(1) << 32;
            borrow = 1;
        }
        r.limbs_[i] = static_cast<uint32_t>(s);
    }
    r.trim();
    return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] +
                           static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::shift_limbs(const BigUint& a, size_t n) {
    if (a.is_zero()) return a;
    BigUint r;
    r.limbs_.assign(n, 0);
    r.limbs_.insert(r.limbs_.end(), a.limbs_.begin(), a.limbs_.end());
    return r;
}

void BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
    if (b.is_zero()) throw std::domain_error("BigUint: division by zero");
    q = BigUint();
    r = a;
    if (a < b) return;
    // schoolbook binary long division, adequate at the scales we count at
    const size_t shift_bits = 32 * (a.limbs_.size() - b.limbs_.size()) + 32;
    for (size_t bit = shift_bits + 1; bit-- > 0;) {
        // candidate = b << bit
        BigUint cand = shift_limbs(b, bit / 32);
        const unsigned sb = bit % 32;
        if (sb) {
            uint32_t carry = 0;
            for (auto& l : cand.limbs_) {
                uint32_t nl = (l << sb) | carry;
                carry = l >> (32 - sb);
                l = nl;
            }
            if (carry) cand.limbs_.push_back(carry);
        }
        if (cand <= r) {
            r = r - cand;
            // set bit in q
            size_t li = bit / 32;
            if (q.limbs_.size() <= li) q.limbs_.resize(li + 1, 0);
            q.limbs_[li] |= uint32_t(1) << sb;
        }
    }
    q.trim();
    r.trim();
}

BigUint operator/(const BigUint& a, const BigUint& b) {
    BigUint q, r;
    BigUint::divmod(a, b, q, r);
    return q;
}

BigUint operator%(const BigUint& a, const BigUint& b) {
    BigUint q, r;
    BigUint::divmod(a, b, q, r);
    return r;
}

BigUint BigUint::pow(uint64_t e) const {
    BigUint base = *this, r(1);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigUint cur = *this;
    const BigUint ten9(1000000000u);
    std::vector<uint32_t> chunks;
    while (!cur.is_zero()) {
        BigUint q, r;
        divmod(cur, ten9, q, r);
        chunks.push_back(r.is_zero() ? 0u : r.limbs_[0]);
        cur = q;
    }
    out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigUint BigUint::from_decimal(const std::string& s) {
    BigUint r;
    const BigUint ten(10);
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigUint: bad decimal digit");
        r = r * ten + BigUint(static_cast<uint64_t>(c - '0'));
    }
    return r;
}

} // namespace mtx
