#include "mtx/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mtx {

namespace {

uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

} // namespace

std::shared_ptr<const Spectrum> Spectrum::build(const Field* field, std::vector<Block> blocks,
                                                const FactorOptions& opt) {
    require(!blocks.empty(), "spectrum: at least one block required");
    auto spec = std::shared_ptr<Spectrum>(new Spectrum());
    spec->field_ = field;

    for (size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        require(b.m >= 1, "spectrum: block length must be positive");
        require(b.m % field->characteristic() != 0,
                "block " + std::to_string(i + 1) + ": gcd(m, q) != 1");
        require(b.lambda.field_ptr() == field,
                "block " + std::to_string(i + 1) + ": twist not in the base field");
        require(!b.lambda.is_zero(), "block " + std::to_string(i + 1) + ": lambda must be nonzero");
        spec->n_ += b.m;
    }
    spec->blocks_ = std::move(blocks);

    // factor every block, collect distinct factors with incidence rows
    const size_t ell = spec->blocks_.size();
    std::vector<std::vector<Poly>> per_block;
    for (const Block& b : spec->blocks_) per_block.push_back(factor_binomial(field, b.m, b.lambda, opt));

    std::vector<Poly> distinct;
    std::vector<std::vector<int>> eps_rows;
    auto find_poly = [&](const Poly& g) -> int {
        for (size_t i = 0; i < distinct.size(); ++i)
            if (distinct[i] == g) return static_cast<int>(i);
        return -1;
    };
    for (size_t i = 0; i < ell; ++i) {
        for (const Poly& g : per_block[i]) {
            int idx = find_poly(g);
            if (idx < 0) {
                distinct.push_back(g);
                eps_rows.emplace_back(ell, 0);
                idx = static_cast<int>(distinct.size()) - 1;
            }
            eps_rows[static_cast<size_t>(idx)][i] = 1;
        }
    }

    // classify
    struct Raw {
        Poly g;
        std::vector<int> eps;
        Poly gstar;
        int cls; // 0 self, 1 pair, 2 unpaired
        int mate = -1;
    };
    std::vector<Raw> raw;
    for (size_t i = 0; i < distinct.size(); ++i) {
        Raw r{distinct[i], eps_rows[i], reciprocal(distinct[i]), 2, -1};
        if (r.gstar == r.g) {
            r.cls = 0;
        } else {
            int mate = find_poly(r.gstar);
            if (mate >= 0) {
                r.cls = 1;
                r.mate = mate;
            }
        }
        raw.push_back(std::move(r));
    }

    std::vector<size_t> self_idx, lead_idx, unpaired_idx;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].cls == 0) self_idx.push_back(i);
        else if (raw[i].cls == 2) unpaired_idx.push_back(i);
        else if (poly_less(raw[i].g, raw[raw[i].mate].g)) lead_idx.push_back(i);
    }
    auto by_poly = [&](size_t a, size_t b) { return poly_less(raw[a].g, raw[b].g); };
    std::sort(self_idx.begin(), self_idx.end(), by_poly);
    std::sort(lead_idx.begin(), lead_idx.end(), by_poly);
    std::sort(unpaired_idx.begin(), unpaired_idx.end(), by_poly);

    spec->s_ = self_idx.size();
    spec->t_ = spec->s_ + lead_idx.size();
    spec->e_ = spec->t_ + unpaired_idx.size();

    std::vector<size_t> order;
    order.insert(order.end(), self_idx.begin(), self_idx.end());
    order.insert(order.end(), lead_idx.begin(), lead_idx.end());
    order.insert(order.end(), unpaired_idx.begin(), unpaired_idx.end());
    for (size_t v : lead_idx) order.push_back(static_cast<size_t>(raw[v].mate));

    // assemble FactorInfo in flat canonical order
    std::map<const Field*, std::shared_ptr<SubfieldMap>> emb_cache;
    for (size_t pos = 0; pos < order.size(); ++pos) {
        const Raw& r = raw[order[pos]];
        FactorInfo fi;
        fi.g = r.g;
        fi.degree = static_cast<unsigned>(r.g.degree());
        fi.eps = r.eps;
        fi.eps_sum = static_cast<unsigned>(std::accumulate(r.eps.begin(), r.eps.end(), 0));
        int mate = find_poly(r.gstar);
        fi.eps_dual.assign(ell, 0);
        if (mate >= 0) fi.eps_dual = raw[static_cast<size_t>(mate)].eps;
        fi.eps_dual_sum = static_cast<unsigned>(
            std::accumulate(fi.eps_dual.begin(), fi.eps_dual.end(), 0));
        fi.tau = 0;
        for (size_t i = 0; i < ell; ++i) fi.tau += static_cast<unsigned>(fi.eps[i] * fi.eps_dual[i]);
        if (pos < spec->s_) fi.cls = FactorClass::self_reciprocal;
        else if (pos < spec->t_) fi.cls = FactorClass::pair_lead;
        else if (pos < spec->e_) fi.cls = FactorClass::unpaired;
        else fi.cls = FactorClass::pair_partner;

        const Field* Fw = Field::make(field->characteristic(),
                                      field->degree() * fi.degree);
        fi.constituent_field = Fw;
        auto it = emb_cache.find(Fw);
        if (it == emb_cache.end())
            it = emb_cache.emplace(Fw, std::make_shared<SubfieldMap>(field, Fw)).first;
        spec->embeddings_.push_back(it->second);
        // canonical root: first root in enumeration order
        bool found = false;
        for (uint64_t idx = 0; idx < Fw->order() && !found; ++idx) {
            FieldElement cand = Fw->from_index(idx);
            if (fi.g.eval_ext(cand, *it->second).is_zero()) {
                fi.alpha = cand;
                found = true;
            }
        }
        require(found, "spectrum: no root of factor in constituent field");
        spec->factors_.push_back(std::move(fi));
    }

    // link partners by flat index
    for (size_t v = spec->s_; v < spec->t_; ++v) {
        size_t mate = spec->e_ + (v - spec->s_);
        spec->factors_[v].partner = static_cast<int>(mate);
        spec->factors_[mate].partner = static_cast<int>(v);
    }

    // power bases in alpha_w
    for (size_t w = 0; w < spec->factors_.size(); ++w) {
        spec->power_bases_.push_back(std::make_shared<PowerBasis>(
            *spec->embeddings_[w], spec->factors_[w].alpha, spec->factors_[w].degree));
    }

    // exponent m and the m/m_i diagnostic
    uint64_t m = 1;
    for (const Block& b : spec->blocks_)
        m = lcm_u64(m, uint64_t(b.m) * field->mult_order(b.lambda));
    spec->exponent_ = m;
    for (const Block& b : spec->blocks_)
        if ((m / b.m) % field->characteristic() == 0) spec->m_over_mi_vanishes_ = true;

    return spec;
}

const SubfieldMap& Spectrum::embedding(size_t w) const { return *embeddings_[w]; }

const PowerBasis& Spectrum::power_basis(size_t w) const { return *power_bases_[w]; }

Poly Spectrum::block_modulus(size_t i) const {
    return Poly::binomial(field_, blocks_[i].m, blocks_[i].lambda);
}

FieldElement Spectrum::m_over_mi(size_t i) const {
    return field_->from_int(exponent_ / blocks_[i].m);
}

int Spectrum::index_of_poly(const Poly& g) const {
    for (size_t w = 0; w < factors_.size(); ++w)
        if (factors_[w].g == g) return static_cast<int>(w);
    return -1;
}

} // namespace mtx
