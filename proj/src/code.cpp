#include "mtx/code.hpp"

#include <algorithm>
#include <numeric>

namespace mtx {

// --- ModuleShape ------------------------------------------------------------

std::shared_ptr<const ModuleShape> ModuleShape::make(const Field* field,
                                                     std::vector<Block> blocks) {
    require(!blocks.empty(), "module shape: at least one block required");
    auto sh = std::make_shared<ModuleShape>();
    sh->field_ = field;
    for (size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        require(b.m >= 1, "block " + std::to_string(i + 1) + ": length must be positive");
        require(b.m % field->characteristic() != 0,
                "block " + std::to_string(i + 1) + ": gcd(m, q) != 1");
        require(b.lambda.field_ptr() == field && !b.lambda.is_zero(),
                "block " + std::to_string(i + 1) + ": lambda must be a nonzero base-field element");
        sh->offsets_.push_back(sh->n_);
        sh->n_ += b.m;
    }
    sh->blocks_ = std::move(blocks);
    return sh;
}

bool ModuleShape::same(const ModuleShape& o) const {
    if (field_ != o.field_ || blocks_.size() != o.blocks_.size()) return false;
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].m != o.blocks_[i].m || !(blocks_[i].lambda == o.blocks_[i].lambda))
            return false;
    return true;
}

std::shared_ptr<const ModuleShape> ModuleShape::dual_shape() const {
    std::vector<Block> inv;
    for (const Block& b : blocks_) inv.push_back({b.m, field_->inv(b.lambda)});
    return make(field_, std::move(inv));
}

Poly ModuleShape::block_modulus(size_t i) const {
    return Poly::binomial(field_, blocks_[i].m, blocks_[i].lambda);
}

// --- Codeword ---------------------------------------------------------------

Codeword::Codeword(ShapePtr shape, std::vector<FieldElement> flat)
    : shape_(std::move(shape)), v_(std::move(flat)) {
    require(v_.size() == shape_->length(), "codeword: length mismatch");
    for (const auto& e : v_)
        require(e.field_ptr() == shape_->field(), "codeword: element outside base field");
}

Codeword Codeword::zero(ShapePtr shape) {
    std::vector<FieldElement> v(shape->length(), shape->field()->zero());
    return Codeword(std::move(shape), std::move(v));
}

Codeword Codeword::from_polys(ShapePtr shape, const std::vector<Poly>& blocks) {
    require(blocks.size() == shape->ell(), "codeword: wrong number of block polynomials");
    std::vector<FieldElement> v;
    v.reserve(shape->length());
    for (size_t i = 0; i < blocks.size(); ++i) {
        const unsigned m = shape->blocks()[i].m;
        Poly r = blocks[i];
        if (r.degree() >= static_cast<int>(m)) r = r % shape->block_modulus(i);
        for (unsigned j = 0; j < m; ++j) v.push_back(r.coeff(j));
    }
    return Codeword(std::move(shape), std::move(v));
}

Poly Codeword::block_poly(size_t i) const {
    const size_t off = shape_->offset(i);
    const unsigned m = shape_->blocks()[i].m;
    std::vector<FieldElement> cs(v_.begin() + static_cast<long>(off),
                                 v_.begin() + static_cast<long>(off + m));
    return Poly(shape_->field(), std::move(cs));
}

std::vector<Poly> Codeword::to_polys() const {
    std::vector<Poly> out;
    for (size_t i = 0; i < shape_->ell(); ++i) out.push_back(block_poly(i));
    return out;
}

std::vector<uint32_t> Codeword::indices() const {
    return FqMat::to_indices(shape_->field(), v_);
}

Codeword Codeword::from_indices(ShapePtr shape, const std::vector<uint32_t>& idx) {
    std::vector<FieldElement> v;
    v.reserve(idx.size());
    for (uint32_t x : idx) v.push_back(shape->field()->from_index(x));
    return Codeword(std::move(shape), std::move(v));
}

bool Codeword::is_zero() const {
    for (const auto& e : v_)
        if (!e.is_zero()) return false;
    return true;
}

bool Codeword::operator==(const Codeword& o) const {
    return shape_->same(*o.shape_) && v_ == o.v_;
}

Codeword Codeword::operator+(const Codeword& o) const {
    require(shape_->same(*o.shape_), "codeword add: shape mismatch");
    std::vector<FieldElement> v = v_;
    for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] + o.v_[i];
    return Codeword(shape_, std::move(v));
}

Codeword Codeword::operator*(const FieldElement& c) const {
    std::vector<FieldElement> v = v_;
    for (auto& e : v) e = e * c;
    return Codeword(shape_, std::move(v));
}

size_t Codeword::hamming_weight() const {
    size_t w = 0;
    for (const auto& e : v_) w += !e.is_zero();
    return w;
}

Codeword lambda_shift(const Codeword& c) {
    const ModuleShape& sh = *c.shape();
    std::vector<FieldElement> v = c.flat();
    for (size_t i = 0; i < sh.ell(); ++i) {
        const size_t off = sh.offset(i);
        const unsigned m = sh.blocks()[i].m;
        FieldElement wrap = v[off + m - 1] * sh.blocks()[i].lambda;
        for (size_t j = m - 1; j > 0; --j) v[off + j] = v[off + j - 1];
        v[off] = wrap;
    }
    return Codeword(c.shape(), std::move(v));
}

void lambda_shift_row(const ModuleShape& shape, const std::vector<uint32_t>& in,
                      std::vector<uint32_t>& out) {
    const FieldOps& ops = shape.field()->ops();
    out.resize(in.size());
    for (size_t i = 0; i < shape.ell(); ++i) {
        const size_t off = shape.offset(i);
        const unsigned m = shape.blocks()[i].m;
        const uint32_t lam = static_cast<uint32_t>(shape.field()->index_of(shape.blocks()[i].lambda));
        out[off] = ops.mul(in[off + m - 1], lam);
        for (size_t j = 1; j < m; ++j) out[off + j] = in[off + j - 1];
    }
}

Codeword lambda_unshift(const Codeword& c) {
    const ModuleShape& sh = *c.shape();
    std::vector<FieldElement> v = c.flat();
    for (size_t i = 0; i < sh.ell(); ++i) {
        const size_t off = sh.offset(i);
        const unsigned m = sh.blocks()[i].m;
        FieldElement head = v[off];
        for (size_t j = 0; j + 1 < m; ++j) v[off + j] = v[off + j + 1];
        v[off + m - 1] = head * sh.field()->inv(sh.blocks()[i].lambda);
    }
    return Codeword(c.shape(), std::move(v));
}

Poly block_action(const ModuleShape& shape, size_t i, const Poly& f, const Poly& a) {
    return (f * a) % shape.block_modulus(i);
}

Codeword module_action(const Poly& f, const Codeword& c) {
    const ShapePtr& sh = c.shape();
    std::vector<Poly> out;
    for (size_t i = 0; i < sh->ell(); ++i) out.push_back(block_action(*sh, i, f, c.block_poly(i)));
    return Codeword::from_polys(sh, out);
}

// --- MTCode -------------------------------------------------------------------

struct MTCode::Lazy {
    std::once_flag spec_once, span_once, cons_once, parity_once;
    SpectrumPtr spec;
    FqMat span;
    std::vector<size_t> pivots;
    std::vector<ConstituentCode> cons;
    std::optional<Poly> parity;
    std::vector<Poly> wpolys;
};

void MTCode::init(SpectrumPtr spec) {
    lazy_ = std::make_shared<Lazy>();
    if (spec) {
        require(spec->field() == shape_->field() && spec->ell() == shape_->ell(),
                "MTCode: spectrum does not match shape");
        lazy_->spec = std::move(spec);
    }
    // reduce generators into the module
    for (auto& g : gens_) {
        require(g.size() == shape_->ell(), "MTCode: generator tuple arity mismatch");
        for (size_t i = 0; i < g.size(); ++i) {
            require(g[i].field() == shape_->field() || g[i].field() == nullptr,
                    "MTCode: generator polynomial in wrong field");
            if (g[i].field() == nullptr) g[i] = Poly(shape_->field());
            if (g[i].degree() >= static_cast<int>(shape_->blocks()[i].m))
                g[i] = g[i] % shape_->block_modulus(i);
        }
    }
}

MTCode::MTCode(ShapePtr shape, std::vector<std::vector<Poly>> generators)
    : shape_(std::move(shape)), gens_(std::move(generators)) {
    init(nullptr);
}

MTCode::MTCode(SpectrumPtr spectrum, ShapePtr shape, std::vector<std::vector<Poly>> generators)
    : shape_(std::move(shape)), gens_(std::move(generators)) {
    init(std::move(spectrum));
}

MTCode MTCode::from_rows(ShapePtr shape, const FqMat& rows) {
    return from_rows(nullptr, std::move(shape), rows);
}

MTCode MTCode::from_rows(SpectrumPtr spectrum, ShapePtr shape, const FqMat& rows) {
    std::vector<std::vector<Poly>> gens;
    for (size_t r = 0; r < rows.nrows(); ++r) {
        Codeword w = Codeword::from_indices(shape, rows.rows[r]);
        gens.push_back(w.to_polys());
    }
    if (spectrum) return MTCode(std::move(spectrum), std::move(shape), std::move(gens));
    return MTCode(std::move(shape), std::move(gens));
}

Codeword MTCode::generator_word(size_t kappa) const {
    return Codeword::from_polys(shape_, gens_[kappa]);
}

SpectrumPtr MTCode::spectrum() const {
    std::call_once(lazy_->spec_once, [this] {
        if (!lazy_->spec) lazy_->spec = Spectrum::build(shape_->field(), shape_->blocks());
    });
    return lazy_->spec;
}

const FqMat& MTCode::span_matrix() const {
    std::call_once(lazy_->span_once, [this] {
        const Field* F = shape_->field();
        FqMat m(F, shape_->length());
        for (size_t k = 0; k < gens_.size(); ++k) m.add_row(generator_word(k).indices());
        std::vector<size_t> piv;
        size_t rank = rref(m, &piv);
        // add shifts of all basis rows until the rank is stable for a full
        // pass; T_Λ has finite order so this terminates, with the exponent as
        // a safety bound
        uint64_t bound = 1;
        for (const Block& b : shape_->blocks()) {
            uint64_t ord = F->mult_order(b.lambda) * uint64_t(b.m);
            bound = bound / std::gcd(bound, ord) * ord;
        }
        for (uint64_t pass = 0; pass <= bound; ++pass) {
            const size_t before = rank;
            FqMat next = m;
            std::vector<uint32_t> shifted;
            for (size_t r = 0; r < m.nrows(); ++r) {
                lambda_shift_row(*shape_, m.rows[r], shifted);
                next.add_row(shifted);
            }
            rank = rref(next, &piv);
            m = std::move(next);
            if (rank == before) break;
        }
        lazy_->span = std::move(m);
        lazy_->pivots = std::move(piv);
    });
    return lazy_->span;
}

const std::vector<size_t>& MTCode::span_pivots() const {
    span_matrix();
    return lazy_->pivots;
}

size_t MTCode::rank() const { return span_matrix().nrows(); }

std::vector<ConstituentCode> constituents_of_rows(const SpectrumPtr& spec, const FqMat& rows) {
    std::vector<ConstituentCode> out;
    const size_t ell = spec->ell();
    auto shape = ModuleShape::make(spec->field(), spec->blocks());
    for (size_t w = 0; w < spec->factor_count(); ++w) {
        const FactorInfo& fi = spec->factor(w);
        const Field* Fw = fi.constituent_field;
        const SubfieldMap& emb = spec->embedding(w);
        ConstituentCode cc;
        cc.w = w;
        cc.field = Fw;
        cc.basis = FqMat(Fw, ell);
        for (size_t r = 0; r < rows.nrows(); ++r) {
            Codeword word = Codeword::from_indices(shape, rows.rows[r]);
            std::vector<uint32_t> row(ell, 0);
            bool nonzero = false;
            for (size_t i = 0; i < ell; ++i) {
                if (!fi.eps[i]) continue;
                FieldElement val = word.block_poly(i).eval_ext(fi.alpha, emb);
                row[i] = static_cast<uint32_t>(Fw->index_of(val));
                nonzero |= (row[i] != 0);
            }
            if (nonzero) cc.basis.add_row(std::move(row));
        }
        rref(cc.basis);
        out.push_back(std::move(cc));
    }
    return out;
}

const std::vector<ConstituentCode>& MTCode::constituents() const {
    std::call_once(lazy_->cons_once, [this] {
        // computed from the original generators, as the decomposition is
        // stated; equality with the echelon-basis version is a test
        FqMat gen_rows(shape_->field(), shape_->length());
        for (size_t k = 0; k < gens_.size(); ++k) gen_rows.add_row(generator_word(k).indices());
        lazy_->cons = constituents_of_rows(spectrum(), gen_rows);
    });
    return lazy_->cons;
}

size_t MTCode::dimension() const {
    SpectrumPtr spec = spectrum();
    const auto& cons = constituents();
    size_t dim = 0;
    for (size_t w = 0; w < cons.size(); ++w) dim += cons[w].dim() * spec->factor(w).degree;
    require(dim == rank(), "dimension: constituent total disagrees with span rank");
    return dim;
}

Poly MTCode::project_block(size_t i) const {
    Poly g = shape_->block_modulus(i);
    for (const auto& gen : gens_) g = poly_gcd(g, gen[i]);
    return g.monic();
}

Poly MTCode::parity_check() const {
    std::call_once(lazy_->parity_once, [this] {
        Poly h = Poly::one(shape_->field());
        for (size_t i = 0; i < shape_->ell(); ++i) {
            Poly wi = project_block(i);
            lazy_->wpolys.push_back(wi);
            h = poly_lcm(h, shape_->block_modulus(i) / wi);
        }
        lazy_->parity = h.is_zero() ? Poly::one(shape_->field()) : h.monic();
    });
    return *lazy_->parity;
}

bool MTCode::contains(const Codeword& c) const {
    require(c.shape()->same(*shape_), "contains: shape mismatch");
    const FqMat& span = span_matrix();
    std::vector<uint32_t> row = c.indices();
    return reduce_row(span, span_pivots(), row);
}

} // namespace mtx
