#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "mtx/linalg.hpp"
#include "mtx/spectrum.hpp"

namespace mtx {

/// Shape of the multi-twisted module V = prod F_q[x]/(x^{m_i} - λ_i):
/// base field, blocks, and flat coordinate offsets.
class ModuleShape {
public:
    static std::shared_ptr<const ModuleShape> make(const Field* field, std::vector<Block> blocks);

    const Field* field() const { return field_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    size_t ell() const { return blocks_.size(); }
    size_t length() const { return n_; }
    size_t offset(size_t i) const { return offsets_[i]; }

    /// Same field and identical blocks (m_i and λ_i).
    bool same(const ModuleShape& o) const;
    /// Shape of the dual module: twists inverted.
    std::shared_ptr<const ModuleShape> dual_shape() const;

    Poly block_modulus(size_t i) const;

private:
    const Field* field_ = nullptr;
    std::vector<Block> blocks_;
    std::vector<size_t> offsets_;
    size_t n_ = 0;
};

using ShapePtr = std::shared_ptr<const ModuleShape>;

/// A word of F_q^n in block form; equivalently a tuple of block polynomials.
class Codeword {
public:
    Codeword() = default;
    Codeword(ShapePtr shape, std::vector<FieldElement> flat);
    static Codeword zero(ShapePtr shape);
    static Codeword from_polys(ShapePtr shape, const std::vector<Poly>& blocks);

    const ShapePtr& shape() const { return shape_; }
    const std::vector<FieldElement>& flat() const { return v_; }
    Poly block_poly(size_t i) const;
    std::vector<Poly> to_polys() const;
    std::vector<uint32_t> indices() const;
    static Codeword from_indices(ShapePtr shape, const std::vector<uint32_t>& idx);

    bool is_zero() const;
    bool operator==(const Codeword& o) const;
    Codeword operator+(const Codeword& o) const;
    Codeword operator*(const FieldElement& c) const;

    size_t hamming_weight() const;

private:
    ShapePtr shape_;
    std::vector<FieldElement> v_;
};

/// The Λ-multi-twisted shift: each block rotates right with wraparound
/// multiplied by its twist; equals multiplication by x in V.
Codeword lambda_shift(const Codeword& c);
/// Index-row version used by the sweeps.
void lambda_shift_row(const ModuleShape& shape, const std::vector<uint32_t>& in,
                      std::vector<uint32_t>& out);
/// Inverse shift (multiplication by x^{-1}).
Codeword lambda_unshift(const Codeword& c);

/// f(x) . a for a single block: f*a mod (x^{m_i} - λ_i).
Poly block_action(const ModuleShape& shape, size_t i, const Poly& f, const Poly& a);
/// f(x) . c in V.
Codeword module_action(const Poly& f, const Codeword& c);

/// Constituent C_w: a linear code of length ℓ over F_w, supported on the
/// ε_w incidence pattern, stored as an RREF basis.
struct ConstituentCode {
    size_t w = 0;
    const Field* field = nullptr; // F_w
    FqMat basis;                  // cols = ℓ
    size_t dim() const { return basis.nrows(); }
};

/// A multi-twisted code: an F_q[x]-submodule of V given by generator tuples.
/// Heavy artifacts (spectrum, span matrix, constituents, parity check) are
/// computed once on first request and shared between copies.
class MTCode {
public:
    MTCode(ShapePtr shape, std::vector<std::vector<Poly>> generators);
    MTCode(SpectrumPtr spectrum, ShapePtr shape, std::vector<std::vector<Poly>> generators);
    /// Generators from flat coefficient rows (used for duals and rebuilt codes).
    static MTCode from_rows(ShapePtr shape, const FqMat& rows);
    static MTCode from_rows(SpectrumPtr spectrum, ShapePtr shape, const FqMat& rows);

    const ShapePtr& shape() const { return shape_; }
    const Field* field() const { return shape_->field(); }
    size_t ell() const { return shape_->ell(); }
    size_t length() const { return shape_->length(); }
    size_t rho() const { return gens_.size(); } // supplied generator count
    const std::vector<std::vector<Poly>>& generators() const { return gens_; }
    Codeword generator_word(size_t kappa) const;

    SpectrumPtr spectrum() const;

    /// Row-echelon basis of span{T_Λ^j(a_κ)}; rows are T_Λ-closed.
    const FqMat& span_matrix() const;
    const std::vector<size_t>& span_pivots() const;
    size_t rank() const;

    /// Σ_w dim C_w · deg g_w, cross-checked against rank().
    size_t dimension() const;

    /// All r constituents, zero ones included, indices aligned with the spectrum.
    const std::vector<ConstituentCode>& constituents() const;

    /// Monic generator w_i of the projection π_i(C); equals the block modulus
    /// when the projection is zero.
    Poly project_block(size_t i) const;

    /// Parity-check polynomial h = lcm_i[(x^{m_i}-λ_i)/w_i].
    Poly parity_check() const;

    bool contains(const Codeword& c) const;
    bool is_zero_code() const { return rank() == 0; }

private:
    struct Lazy;
    ShapePtr shape_;
    std::vector<std::vector<Poly>> gens_;
    std::shared_ptr<Lazy> lazy_;

    void init(SpectrumPtr spec);
};

/// Constituents computed directly from arbitrary generator rows (used to
/// check the original-generators vs echelon-basis equality and by duals).
std::vector<ConstituentCode> constituents_of_rows(const SpectrumPtr& spec, const FqMat& rows);

} // namespace mtx
