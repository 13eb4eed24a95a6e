#include "mtx/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mtx {

namespace {

constexpr uint64_t kMaxFieldOrder = uint64_t(1) << 20;
constexpr uint32_t kTableLimit = 1024; // build index tables up to this order

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t checked_pow(uint64_t p, unsigned k) {
    uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        require(q <= kMaxFieldOrder / p, "field order exceeds 2^20");
        q *= p;
    }
    return q;
}

// --- raw F_p[x] helpers (little-endian coefficient vectors) ---------------

using RawPoly = std::vector<uint32_t>;

void raw_trim(RawPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    RawPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    // reduce mod monic f
    const size_t df = f.size() - 1;
    for (size_t i = c.size(); i-- > df;) {
        uint64_t lead = c[i];
        if (!lead) continue;
        c[i] = 0;
        for (size_t j = 0; j < df; ++j)
            c[i - df + j] =
                static_cast<uint32_t>((c[i - df + j] + (p - f[j] % p) * lead) % p);
    }
    c.resize(std::min(c.size(), df));
    raw_trim(c);
    return c;
}

RawPoly raw_powmod(RawPoly base, uint64_t e, const RawPoly& f, uint64_t p) {
    RawPoly r = {1};
    while (e) {
        if (e & 1) r = raw_mulmod(r, base, f, p);
        base = raw_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// x^(p^j) mod f by j successive p-th powers
RawPoly raw_frob_iter(const RawPoly& f, uint64_t p, unsigned j) {
    RawPoly x = {0, 1};
    RawPoly r = raw_mulmod(x, {1}, f, p);
    for (unsigned i = 0; i < j; ++i) r = raw_powmod(r, p, f, p);
    return r;
}

RawPoly raw_sub(RawPoly a, const RawPoly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<uint32_t>((a[i] + p - b[i]) % p);
    raw_trim(a);
    return a;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, uint64_t p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        uint64_t lead_inv = 1;
        {
            // inverse of b's leading coefficient mod p
            uint64_t l = b.back(), x = 1, base = l, e = p - 2;
            while (e) {
                if (e & 1) x = x * base % p;
                base = base * base % p;
                e >>= 1;
            }
            lead_inv = x;
        }
        RawPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            uint64_t c = uint64_t(r.back()) * lead_inv % p;
            size_t shift = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                r[shift + i] =
                    static_cast<uint32_t>((r[shift + i] + (p - b[i] % p) * c) % p);
            raw_trim(r);
            if (r.size() > shift + b.size() - 1) break; // safety, should not happen
        }
        a = b;
        b = r;
    }
    return a;
}

bool raw_irreducible(const RawPoly& f, uint64_t p) {
    const size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    // Rabin test
    // distinct prime divisors of k
    std::vector<unsigned> prim;
    size_t kk = k;
    for (size_t d = 2; d * d <= kk; ++d)
        if (kk % d == 0) {
            prim.push_back(static_cast<unsigned>(d));
            while (kk % d == 0) kk /= d;
        }
    if (kk > 1) prim.push_back(static_cast<unsigned>(kk));
    for (unsigned r : prim) {
        RawPoly h = raw_frob_iter(f, p, static_cast<unsigned>(k / r));
        h = raw_sub(h, {0, 1}, p);
        RawPoly g = raw_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    RawPoly h = raw_frob_iter(f, p, static_cast<unsigned>(k));
    h = raw_sub(h, {0, 1}, p);
    return h.empty();
}

// --- shared little Gaussian solver over F_p -------------------------------

struct FpSolver {
    uint64_t p = 0;
    size_t nrows = 0, ncols = 0;
    // RREF of [M | I]: rref rows, and for each pivot row its pivot column.
    std::vector<std::vector<uint32_t>> rows; // length ncols + nrows each
    std::vector<int> pivot_col;

    void build(uint64_t p_, const std::vector<std::vector<uint32_t>>& cols) {
        p = p_;
        ncols = cols.size();
        nrows = cols.empty() ? 0 : cols[0].size();
        rows.assign(nrows, std::vector<uint32_t>(ncols + nrows, 0));
        for (size_t r = 0; r < nrows; ++r) {
            for (size_t c = 0; c < ncols; ++c) rows[r][c] = cols[c][r];
            rows[r][ncols + r] = 1;
        }
        pivot_col.clear();
        size_t rr = 0;
        for (size_t c = 0; c < ncols && rr < nrows; ++c) {
            size_t sel = rr;
            while (sel < nrows && rows[sel][c] == 0) ++sel;
            if (sel == nrows) continue;
            std::swap(rows[sel], rows[rr]);
            uint64_t inv = 1, base = rows[rr][c], e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& v : rows[rr]) v = static_cast<uint32_t>(v * inv % p);
            for (size_t r2 = 0; r2 < nrows; ++r2) {
                if (r2 == rr || rows[r2][c] == 0) continue;
                uint64_t fct = rows[r2][c];
                for (size_t j = 0; j < rows[r2].size(); ++j)
                    rows[r2][j] = static_cast<uint32_t>(
                        (rows[r2][j] + (p - rows[rr][j] % p) * fct) % p);
            }
            pivot_col.push_back(static_cast<int>(c));
            ++rr;
        }
        require(pivot_col.size() == ncols, "FpSolver: columns not independent");
    }

    // Solve M x = y; returns true and fills x when consistent.
    bool solve(const std::vector<uint32_t>& y, std::vector<uint32_t>& x) const {
        x.assign(ncols, 0);
        std::vector<uint32_t> t(nrows, 0);
        for (size_t r = 0; r < nrows; ++r) {
            uint64_t acc = 0;
            for (size_t j = 0; j < nrows; ++j)
                acc = (acc + uint64_t(rows[r][ncols + j]) * y[j]) % p;
            t[r] = static_cast<uint32_t>(acc);
        }
        for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = t[r];
        for (size_t r = pivot_col.size(); r < nrows; ++r)
            if (t[r] != 0) return false;
        return true;
    }
};

std::string field_key(uint64_t p, unsigned k, const std::vector<uint32_t>& modulus) {
    std::ostringstream os;
    os << p << ':' << k;
    for (auto c : modulus) os << ':' << c;
    return os.str();
}

std::map<std::string, std::unique_ptr<Field>>& registry() {
    static std::map<std::string, std::unique_ptr<Field>> reg;
    return reg;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

// --- Field ----------------------------------------------------------------

Field::Field(uint64_t p, unsigned k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), q_(checked_pow(p, k)), modulus_(std::move(modulus)) {
    if (k_ >= 2) {
        // x^{k+i} mod modulus, built incrementally
        xpow_.resize(k_ - 1);
        std::vector<uint32_t> cur(k_, 0); // x^k mod f = -(low part)
        for (unsigned j = 0; j < k_; ++j)
            cur[j] = static_cast<uint32_t>((p_ - modulus_[j] % p_) % p_);
        xpow_[0] = cur;
        for (unsigned i = 1; i < k_ - 1; ++i) {
            std::vector<uint32_t> nxt(k_, 0);
            // multiply cur by x
            uint64_t carry = cur[k_ - 1];
            for (unsigned j = k_ - 1; j > 0; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (carry) {
                for (unsigned j = 0; j < k_; ++j)
                    nxt[j] = static_cast<uint32_t>(
                        (nxt[j] + carry * xpow_[0][j]) % p_);
            }
            xpow_[i] = nxt;
            cur = nxt;
        }
    }
}

const Field* Field::make(uint64_t p, unsigned k) {
    require(is_prime_u64(p), "make_field: p must be prime");
    require(k >= 1, "make_field: extension degree must be positive");
    checked_pow(p, k);
    // canonical modulus: lexicographically smallest monic irreducible,
    // low-to-high coefficient comparison = smallest enumeration index
    if (k == 1) return make(p, k, {0, 1});
    uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    for (uint64_t c = 0; c < total; ++c) {
        RawPoly f(k + 1, 0);
        uint64_t t = c;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        f[k] = 1;
        if (raw_irreducible(f, p)) return make(p, k, f);
    }
    throw MtxError("make_field: no irreducible modulus found"); // unreachable
}

const Field* Field::make(uint64_t p, unsigned k, const std::vector<uint32_t>& modulus) {
    require(is_prime_u64(p), "make_field: p must be prime");
    require(k >= 1, "make_field: extension degree must be positive");
    require(modulus.size() == k + 1, "make_field: modulus degree mismatch");
    require(modulus[k] == 1, "make_field: modulus must be monic");
    for (auto c : modulus) require(c < p, "make_field: modulus coefficients must be reduced mod p");
    require(raw_irreducible(modulus, p), "make_field: modulus is reducible");
    checked_pow(p, k);

    const std::string key = field_key(p, k, modulus);
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& reg = registry();
    auto it = reg.find(key);
    if (it == reg.end()) {
        it = reg.emplace(key, std::unique_ptr<Field>(new Field(p, k, modulus))).first;
    }
    return it->second.get();
}

FieldElement Field::zero() const { return FieldElement(this, std::vector<uint32_t>(k_, 0)); }

FieldElement Field::one() const {
    std::vector<uint32_t> d(k_, 0);
    d[0] = 1 % p_;
    return FieldElement(this, d);
}

FieldElement Field::from_int(uint64_t n) const {
    std::vector<uint32_t> d(k_, 0);
    d[0] = static_cast<uint32_t>(n % p_);
    return FieldElement(this, d);
}

FieldElement Field::from_digits(std::vector<uint32_t> digits) const {
    require(digits.size() <= k_, "from_digits: too many digits");
    digits.resize(k_, 0);
    for (auto& c : digits) c %= p_;
    return FieldElement(this, std::move(digits));
}

FieldElement Field::from_index(uint64_t idx) const {
    require(idx < q_, "from_index: index out of range");
    std::vector<uint32_t> d(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = static_cast<uint32_t>(idx % p_);
        idx /= p_;
    }
    return FieldElement(this, std::move(d));
}

uint64_t Field::index_of(const FieldElement& x) const {
    require(x.field_ptr() == this, "index_of: element of another field");
    uint64_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + x.digits()[i];
    return idx;
}

FieldElement Field::gen() const {
    if (k_ == 1) return one();
    std::vector<uint32_t> d(k_, 0);
    d[1] = 1;
    return FieldElement(this, d);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    require(a.field_ptr() == this && b.field_ptr() == this, "add: field mismatch");
    std::vector<uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i)
        d[i] = static_cast<uint32_t>((uint64_t(a.digits()[i]) + b.digits()[i]) % p_);
    return FieldElement(this, std::move(d));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    require(a.field_ptr() == this && b.field_ptr() == this, "sub: field mismatch");
    std::vector<uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i)
        d[i] = static_cast<uint32_t>((uint64_t(a.digits()[i]) + p_ - b.digits()[i]) % p_);
    return FieldElement(this, std::move(d));
}

FieldElement Field::neg(const FieldElement& a) const {
    require(a.field_ptr() == this, "neg: field mismatch");
    std::vector<uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i)
        d[i] = static_cast<uint32_t>((p_ - a.digits()[i]) % p_);
    return FieldElement(this, std::move(d));
}

std::vector<uint32_t> Field::mul_raw(const std::vector<uint32_t>& a,
                                     const std::vector<uint32_t>& b) const {
    if (k_ == 1) return {static_cast<uint32_t>(uint64_t(a[0]) * b[0] % p_)};
    std::vector<uint64_t> c(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < k_; ++j) c[i + j] += uint64_t(a[i]) * b[j] % p_;
    }
    std::vector<uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) d[i] = static_cast<uint32_t>(c[i] % p_);
    for (unsigned i = k_; i < 2 * k_ - 1; ++i) {
        uint64_t coeff = c[i] % p_;
        if (!coeff) continue;
        const auto& red = xpow_[i - k_];
        for (unsigned j = 0; j < k_; ++j)
            d[j] = static_cast<uint32_t>((d[j] + coeff * red[j]) % p_);
    }
    return d;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    require(a.field_ptr() == this && b.field_ptr() == this, "mul: field mismatch");
    return FieldElement(this, mul_raw(a.digits(), b.digits()));
}

FieldElement Field::pow(const FieldElement& a, uint64_t e) const {
    require(a.field_ptr() == this, "pow: field mismatch");
    FieldElement r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement Field::inv(const FieldElement& a) const {
    require(a.field_ptr() == this, "inv: field mismatch");
    require(!a.is_zero(), "inv: division by zero");
    return pow(a, q_ - 2);
}

uint64_t Field::mult_order(const FieldElement& x) const {
    require(!x.is_zero(), "mult_order: zero element");
    uint64_t n = q_ - 1;
    // divisors of q-1 in increasing order
    std::vector<uint64_t> divs;
    for (uint64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    std::sort(divs.begin(), divs.end());
    for (uint64_t d : divs)
        if (pow(x, d).is_one()) return d;
    throw MtxError("mult_order: broken field arithmetic");
}

bool Field::is_square(const FieldElement& x) const {
    if (p_ == 2) return true;
    if (x.is_zero()) return true;
    return pow(x, (q_ - 1) / 2).is_one();
}

std::string Field::encode(const FieldElement& x) const {
    require(x.field_ptr() == this, "encode: field mismatch");
    if (k_ == 1) return std::to_string(x.digits()[0]);
    std::string s;
    for (unsigned i = 0; i < k_; ++i) {
        if (i) s += ',';
        s += std::to_string(x.digits()[i]);
    }
    return s;
}

FieldElement Field::decode(const std::string& text) const {
    std::vector<uint32_t> d;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            require(!cur.empty(), "decode: empty field-element digit");
            uint64_t v = 0;
            for (char c : cur) {
                require(c >= '0' && c <= '9', "decode: bad digit '" + cur + "'");
                v = v * 10 + static_cast<uint64_t>(c - '0');
                require(v < p_, "decode: digit " + cur + " not reduced mod " + std::to_string(p_));
            }
            d.push_back(static_cast<uint32_t>(v));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    require(!d.empty() && d.size() <= k_, "decode: wrong number of digits for this field");
    return from_digits(std::move(d));
}

const FieldOps& Field::ops() const {
    std::call_once(ops_once_, [this] { ops_.reset(new FieldOps(this)); });
    return *ops_;
}

// --- FieldElement ----------------------------------------------------------

bool FieldElement::is_zero() const {
    for (auto d : digits_)
        if (d) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (digits_.empty() || digits_[0] != 1) return false;
    for (size_t i = 1; i < digits_.size(); ++i)
        if (digits_[i]) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return field().add(*this, o); }
FieldElement FieldElement::operator-(const FieldElement& o) const { return field().sub(*this, o); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return field().mul(*this, o); }
FieldElement FieldElement::operator/(const FieldElement& o) const {
    return field().mul(*this, field().inv(o));
}
FieldElement FieldElement::operator-() const { return field().neg(*this); }

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && digits_ == o.digits_;
}

FieldElement FieldElement::inverse() const { return field().inv(*this); }
FieldElement FieldElement::pow(uint64_t e) const { return field().pow(*this, e); }

// --- FieldOps ---------------------------------------------------------------

// TODO: Zech-log tables would shrink the q^2 mul table to O(q) for the
// mid-size fields the sweeps touch; same interface, only this ctor changes.
FieldOps::FieldOps(const Field* f) : f_(f), q_(static_cast<uint32_t>(f->order())) {
    if (q_ <= kTableLimit) {
        add_.resize(size_t(q_) * q_);
        mul_.resize(size_t(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        std::vector<FieldElement> elems;
        elems.reserve(q_);
        for (uint32_t i = 0; i < q_; ++i) elems.push_back(f->from_index(i));
        for (uint32_t a = 0; a < q_; ++a) {
            neg_[a] = static_cast<uint32_t>(f->index_of(f->neg(elems[a])));
            for (uint32_t b = 0; b < q_; ++b) {
                add_[size_t(a) * q_ + b] = static_cast<uint32_t>(f->index_of(f->add(elems[a], elems[b])));
                uint32_t m = static_cast<uint32_t>(f->index_of(f->mul(elems[a], elems[b])));
                mul_[size_t(a) * q_ + b] = m;
                if (m == static_cast<uint32_t>(f->index_of(f->one())) && b != 0) inv_[a] = b;
            }
        }
    }
}

uint32_t FieldOps::add_slow(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(f_->index_of(f_->add(f_->from_index(a), f_->from_index(b))));
}

uint32_t FieldOps::mul_slow(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(f_->index_of(f_->mul(f_->from_index(a), f_->from_index(b))));
}

uint32_t FieldOps::neg_slow(uint32_t a) const {
    return static_cast<uint32_t>(f_->index_of(f_->neg(f_->from_index(a))));
}

uint32_t FieldOps::inv(uint32_t a) const {
    require(a != 0, "FieldOps::inv: zero element");
    if (!inv_.empty()) return inv_[a];
    return static_cast<uint32_t>(f_->index_of(f_->inv(f_->from_index(a))));
}

// --- SubfieldMap -------------------------------------------------------------

SubfieldMap::SubfieldMap(const Field* base, const Field* ext) : base_(base), ext_(ext) {
    require(base->characteristic() == ext->characteristic(),
            "subfield map: different characteristics");
    require(ext->degree() % base->degree() == 0, "subfield map: base is not a subfield");
    d_ = ext->degree() / base->degree();

    if (base->degree() == 1) {
        gen_image_ = ext->one();
    } else {
        // first root of the base modulus in canonical enumeration order
        bool found = false;
        for (uint64_t i = 0; i < ext->order() && !found; ++i) {
            FieldElement cand = ext->from_index(i);
            FieldElement acc = ext->zero(), powv = ext->one();
            for (uint32_t c : base->modulus()) {
                acc = acc + ext->from_int(c) * powv;
                powv = powv * cand;
            }
            if (acc.is_zero()) {
                gen_image_ = cand;
                found = true;
            }
        }
        require(found, "subfield map: modulus has no root in extension");
    }

    const unsigned k = base->degree();
    base_basis_img_.clear();
    FieldElement cur = ext->one();
    for (unsigned j = 0; j < k; ++j) {
        base_basis_img_.push_back(cur);
        cur = cur * gen_image_;
    }
    std::vector<std::vector<uint32_t>> cols;
    for (const auto& b : base_basis_img_) cols.push_back(b.digits());
    FpSolver solver;
    solver.build(base->characteristic(), cols);
    solve_cols_ = std::move(solver.rows);
    pivot_of_row_.assign(solver.pivot_col.begin(), solver.pivot_col.end());
}

std::vector<uint32_t> SubfieldMap::to_prime_vec(const FieldElement& y) const {
    return y.digits();
}

FieldElement SubfieldMap::up(const FieldElement& x) const {
    require(x.field_ptr() == base_, "subfield up: element not in base field");
    FieldElement acc = ext_->zero();
    for (unsigned j = 0; j < base_->degree(); ++j) {
        if (!x.digits()[j]) continue;
        acc = acc + ext_->from_int(x.digits()[j]) * base_basis_img_[j];
    }
    return acc;
}

bool SubfieldMap::in_image(const FieldElement& y) const {
    require(y.field_ptr() == ext_, "subfield: element not in extension");
    return ext_->pow(y, base_->order()) == y;
}

FieldElement SubfieldMap::down(const FieldElement& y) const {
    require(y.field_ptr() == ext_, "subfield down: element not in extension");
    const uint64_t p = base_->characteristic();
    const size_t nrows = ext_->degree();
    const size_t ncols = base_->degree();
    std::vector<uint32_t> t(nrows, 0);
    for (size_t r = 0; r < nrows; ++r) {
        uint64_t acc = 0;
        for (size_t j = 0; j < nrows; ++j)
            acc = (acc + uint64_t(solve_cols_[r][ncols + j]) * y.digits()[j]) % p;
        t[r] = static_cast<uint32_t>(acc);
    }
    std::vector<uint32_t> x(ncols, 0);
    for (size_t r = 0; r < pivot_of_row_.size(); ++r) x[pivot_of_row_[r]] = t[r];
    for (size_t r = pivot_of_row_.size(); r < nrows; ++r)
        require(t[r] == 0, "subfield down: element not in subfield image");
    return base_->from_digits(std::move(x));
}

FieldElement SubfieldMap::trace(const FieldElement& y) const {
    require(y.field_ptr() == ext_, "trace: element not in extension");
    FieldElement acc = ext_->zero();
    FieldElement cur = y;
    for (unsigned i = 0; i < d_; ++i) {
        acc = acc + cur;
        cur = ext_->pow(cur, base_->order());
    }
    return down(acc);
}

// --- PowerBasis ---------------------------------------------------------------

PowerBasis::PowerBasis(const SubfieldMap& emb, const FieldElement& g, unsigned d)
    : emb_(&emb), g_(g), d_(d) {
    const Field* ext = emb.ext();
    const Field* base = emb.base();
    require(g.field_ptr() == ext, "PowerBasis: generator not in extension");
    require(base->degree() * d == ext->degree(), "PowerBasis: degree mismatch");
    std::vector<std::vector<uint32_t>> cols;
    FieldElement gp = ext->one();
    for (unsigned j = 0; j < d_; ++j) {
        for (unsigned b = 0; b < base->degree(); ++b) {
            std::vector<uint32_t> dd(base->degree(), 0);
            dd[b] = 1;
            FieldElement col = emb.up(base->from_digits(dd)) * gp;
            basis_.push_back(col);
            cols.push_back(col.digits());
        }
        gp = gp * g_;
    }
    FpSolver solver;
    solver.build(base->characteristic(), cols);
    solve_cols_ = std::move(solver.rows);
    pivot_of_row_.assign(solver.pivot_col.begin(), solver.pivot_col.end());
}

std::vector<FieldElement> PowerBasis::coords(const FieldElement& x) const {
    const Field* ext = emb_->ext();
    const Field* base = emb_->base();
    require(x.field_ptr() == ext, "PowerBasis::coords: element not in extension");
    const uint64_t p = base->characteristic();
    const size_t nrows = ext->degree();
    const size_t ncols = basis_.size();
    std::vector<uint32_t> t(nrows, 0);
    for (size_t r = 0; r < nrows; ++r) {
        uint64_t acc = 0;
        for (size_t j = 0; j < nrows; ++j)
            acc = (acc + uint64_t(solve_cols_[r][ncols + j]) * x.digits()[j]) % p;
        t[r] = static_cast<uint32_t>(acc);
    }
    std::vector<uint32_t> sol(ncols, 0);
    for (size_t r = 0; r < pivot_of_row_.size(); ++r) sol[pivot_of_row_[r]] = t[r];
    std::vector<FieldElement> out;
    out.reserve(d_);
    const unsigned k = base->degree();
    for (unsigned j = 0; j < d_; ++j) {
        std::vector<uint32_t> dd(sol.begin() + j * k, sol.begin() + (j + 1) * k);
        out.push_back(base->from_digits(std::move(dd)));
    }
    return out;
}

FieldElement PowerBasis::eval_at(const std::vector<FieldElement>& c,
                                 const FieldElement& h) const {
    const Field* ext = emb_->ext();
    require(c.size() == d_, "PowerBasis::eval_at: wrong coordinate count");
    FieldElement acc = ext->zero(), hp = ext->one();
    for (unsigned j = 0; j < d_; ++j) {
        acc = acc + emb_->up(c[j]) * hp;
        hp = hp * h;
    }
    return acc;
}

} // namespace mtx
