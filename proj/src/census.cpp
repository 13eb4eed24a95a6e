#include "mtx/census.hpp"

#include "mtx/concat.hpp"

#include <functional>

namespace mtx {

namespace {

BigUint exact_div(const BigUint& a, const BigUint& b, const char* what) {
    BigUint q, r;
    BigUint::divmod(a, b, q, r);
    require(r.is_zero(), std::string("census: non-exact division in ") + what);
    return q;
}

// Π_{a=lo}^{hi} (Q^a + 1)
BigUint prod_qa_plus1(const BigUint& Q, unsigned lo, unsigned hi) {
    BigUint r(1);
    for (unsigned a = lo; a <= hi && hi + 1 != 0; ++a) r = r * (Q.pow(a) + BigUint(1));
    return r;
}

// 𝔇_u: number of self-dual subspaces of the ε_u-dimensional formed space
// at a self-reciprocal factor (requires ε_u even).
BigUint d_self_reciprocal(uint64_t q, unsigned d, unsigned eps, std::string& tag) {
    require(eps % 2 == 0, "self-dual factor count needs even incidence");
    const unsigned half = eps / 2;
    if (d == 1) {
        BigUint Q(q);
        if (q % 2 == 1) {
            tag = "orthogonal, q odd";
            return half == 0 ? BigUint(1) : prod_qa_plus1(Q, 0, half - 1);
        }
        tag = "orthogonal, q even";
        return half <= 1 ? BigUint(1) : prod_qa_plus1(Q, 1, half - 1);
    }
    // unitary: Π (q^{(2a+1)d/2} + 1)
    tag = "unitary";
    require(d % 2 == 0, "unitary factor with odd degree");
    BigUint Qh = BigUint(q).pow(d / 2); // q^{d/2}
    BigUint r(1);
    for (unsigned a = 0; a < half; ++a) r = r * (Qh.pow(2 * a + 1) + BigUint(1));
    return r;
}

// 𝔈_u: number of self-orthogonal subspaces at a self-reciprocal factor.
// `plus_type` tells whether the even-dimensional orthogonal space has maximal
// Witt index; it depends on the discriminant of the diag(m/m_i) form, not on
// q alone.
BigUint e_self_reciprocal(uint64_t q, unsigned d, unsigned eps, bool plus_type,
                          std::string& tag) {
    BigUint Q(q);
    if (d == 1 && q % 2 == 1) {
        // orthogonal geometry over F_q, q odd
        unsigned witt;
        int corr; // exponent correction: q^{witt - corr - a}
        if (eps % 2 == 1) {
            witt = (eps - 1) / 2;
            corr = 0;
            tag = "orthogonal, eps odd";
        } else if (plus_type) {
            witt = eps / 2;
            corr = 1;
            tag = "orthogonal, eps even, hyperbolic";
        } else {
            witt = (eps - 2) / 2;
            corr = -1;
            tag = "orthogonal, eps even, elliptic";
        }
        BigUint sum(0);
        for (unsigned k = 0; k <= witt; ++k) {
            BigUint term = q_binomial(witt, k, Q);
            for (unsigned a = 0; a < k; ++a)
                term = term * (Q.pow(static_cast<unsigned>(static_cast<int>(witt) - corr -
                                                           static_cast<int>(a))) +
                               BigUint(1));
            sum += term;
        }
        return sum;
    }
    if (d == 1) {
        // characteristic 2: symplectic counting on the hyperplane
        if (eps % 2 == 1) {
            tag = "symplectic, eps odd";
            const unsigned w = (eps - 1) / 2;
            BigUint sum(0);
            for (unsigned k = 0; k <= w; ++k) {
                BigUint term = q_binomial(w, k, Q);
                for (unsigned a = 0; a < k; ++a)
                    term = term * (Q.pow((eps - 2 * a - 1) / 2) + BigUint(1));
                sum += term;
            }
            return sum;
        }
        tag = "symplectic, eps even";
        const unsigned w = (eps - 2) / 2;
        BigUint sum(0);
        for (unsigned k = 0; k <= w; ++k) {
            BigUint term = q_binomial(w, k, Q);
            for (unsigned a = 0; a < k; ++a)
                term = term * (Q.pow((eps - 2 * a - 2) / 2) + BigUint(1));
            sum += term;
        }
        for (unsigned kp = 1; kp <= eps / 2; ++kp) {
            BigUint term = Q.pow(eps - 2 * kp) * q_binomial(w, kp - 1, Q);
            for (unsigned a = 0; a + 1 < kp; ++a)
                term = term * (Q.pow((eps - 2 * a - 2) / 2) + BigUint(1));
            sum += term;
        }
        return sum;
    }
    // unitary geometry over F_{q^d}, d even; count k-dimensional totally
    // isotropic subspaces with the product running a = eps+1-2k .. eps
    tag = "unitary";
    require(d % 2 == 0, "unitary factor with odd degree");
    BigUint Qh = BigUint(q).pow(d / 2);
    const unsigned witt = (eps % 2 == 0) ? eps / 2 : (eps - 1) / 2;
    BigUint sum(0);
    for (unsigned k = 0; k <= witt; ++k) {
        BigUint num(1), den(1);
        for (unsigned a = eps + 1 - 2 * k; a <= eps; ++a) {
            if (a % 2 == 0)
                num = num * (Qh.pow(a) - BigUint(1));
            else
                num = num * (Qh.pow(a) + BigUint(1));
        }
        for (unsigned j = 1; j <= k; ++j) den = den * (Qh.pow(2 * j) - BigUint(1));
        sum += exact_div(num, den, "unitary isotropic count");
    }
    return sum;
}

// Whether the orthogonal space diag(m/m_i) on the support of a degree-one
// self-reciprocal factor has maximal Witt index: (-1)^{eps/2} times the form
// discriminant must be a square. The all-equal-block specialization reduces
// to the familiar "(-1)^{eps/2} is a square" test.
bool orthogonal_plus_type(const Spectrum& spec, const FactorInfo& fi) {
    const Field* F = spec.field();
    FieldElement disc = F->one();
    for (size_t i = 0; i < spec.ell(); ++i)
        if (fi.eps[i]) disc = disc * spec.m_over_mi(i);
    require(!disc.is_zero(), "census: m/m_i vanishes on a factor support");
    FieldElement v = F->pow(F->neg(F->one()), fi.eps_sum / 2) * disc;
    return F->is_square(v);
}

} // namespace

BigUint q_binomial(unsigned k, unsigned b, const BigUint& Q) {
    if (b > k) return BigUint(0);
    BigUint num(1), den(1);
    for (unsigned d = 0; d < b; ++d) {
        num = num * (Q.pow(k) - Q.pow(d));
        den = den * (Q.pow(b) - Q.pow(d));
    }
    return exact_div(num, den, "q_binomial");
}

BigUint num_subspaces(unsigned k, const BigUint& Q) {
    BigUint sum(1);
    for (unsigned b = 1; b <= k; ++b) sum += q_binomial(k, b, Q);
    return sum;
}

BigUint count_all(const Spectrum& spec) {
    BigUint total(1);
    for (const FactorInfo& fi : spec.factors())
        total = total * num_subspaces(fi.eps_sum, BigUint(spec.field()->order()).pow(fi.degree));
    return total;
}

BigUint count_self_dual(const Spectrum& spec) { return census(spec).self_dual; }

BigUint count_self_orthogonal(const Spectrum& spec) { return census(spec).self_orthogonal; }

namespace {

// An unpaired factor supported on blocks with non-self-inverse twists makes
// its slot pair with itself under the standard inner product, and totally
// isotropic pieces may exist even though the factor has no reciprocal mate.
// For a two-block support the isotropic F_w-subspaces are exactly the lines
// (1, ρ) whose concatenated image is self-orthogonal; the candidates are
// scanned directly. Pieces of distinct self-pairing slots also pair with
// each other, so the final count walks the compatibility graph.
struct SelfPairingSlot {
    size_t w = 0;
    unsigned piece_dim = 0;     // F_q-dimension contributed by a chosen line
    std::vector<FqMat> lines;   // generator rows of each isotropic line piece
};

bool rows_mutually_orthogonal(const Field* f, const FqMat& a, const FqMat& b) {
    for (size_t i = 0; i < a.nrows(); ++i)
        for (size_t j = 0; j < b.nrows(); ++j)
            if (dot(f, a.rows[i], b.rows[j]) != 0) return false;
    return true;
}

std::vector<SelfPairingSlot> analyze_self_pairing(const Spectrum& spec,
                                                  const std::vector<size_t>& slots) {
    std::vector<SelfPairingSlot> out;
    if (slots.empty()) return out;
    auto spec_ptr = Spectrum::build(spec.field(), spec.blocks());
    ConcatContext ctx(spec_ptr);
    const Field* F = spec.field();
    for (size_t w : slots) {
        const FactorInfo& fi = spec.factor(w);
        SelfPairingSlot slot;
        slot.w = w;
        slot.piece_dim = fi.degree;
        const Field* Fw = fi.constituent_field;
        std::vector<size_t> sup;
        for (size_t i = 0; i < spec.ell(); ++i)
            if (fi.eps[i]) sup.push_back(i);
        // candidate isotropic lines (1, rho); single-coordinate pieces can
        // never be isotropic here
        for (uint64_t ri = 1; ri < Fw->order(); ++ri) {
            FieldElement rho = Fw->from_index(ri);
            FqMat rows(F, spec.length());
            std::vector<uint32_t> blockrow;
            for (unsigned j = 0; j < fi.degree; ++j) {
                FieldElement scale = Fw->pow(fi.alpha, j);
                std::vector<uint32_t> flat(spec.length(), 0);
                ctx.psi_row(w, sup[0], scale, blockrow);
                size_t off = 0;
                for (size_t i = 0; i < sup[0]; ++i) off += spec.blocks()[i].m;
                std::copy(blockrow.begin(), blockrow.end(), flat.begin() + static_cast<long>(off));
                ctx.psi_row(w, sup[1], rho * scale, blockrow);
                off = 0;
                for (size_t i = 0; i < sup[1]; ++i) off += spec.blocks()[i].m;
                std::copy(blockrow.begin(), blockrow.end(), flat.begin() + static_cast<long>(off));
                rows.add_row(std::move(flat));
            }
            if (rows_mutually_orthogonal(F, rows, rows)) slot.lines.push_back(std::move(rows));
        }
        out.push_back(std::move(slot));
    }
    return out;
}

// Count the admissible joint configurations: each slot picks nothing or one
// of its isotropic lines, chosen pieces pairwise orthogonal. `full` restricts
// to configurations where every slot picks a line (the self-dual case).
BigUint count_configs(const Field* f, const std::vector<SelfPairingSlot>& slots, bool full) {
    BigUint count(0);
    std::vector<int> pick(slots.size(), -1);
    std::function<void(size_t)> walk = [&](size_t idx) {
        if (idx == slots.size()) {
            if (full)
                for (int p : pick)
                    if (p < 0) return;
            count += BigUint(1);
            return;
        }
        if (!full) {
            pick[idx] = -1;
            walk(idx + 1);
        }
        for (size_t l = 0; l < slots[idx].lines.size(); ++l) {
            bool ok = true;
            for (size_t prev = 0; prev < idx && ok; ++prev) {
                if (pick[prev] < 0) continue;
                ok = rows_mutually_orthogonal(f, slots[prev].lines[static_cast<size_t>(pick[prev])],
                                              slots[idx].lines[l]);
            }
            if (!ok) continue;
            pick[idx] = static_cast<int>(l);
            walk(idx + 1);
            pick[idx] = -1;
        }
    };
    walk(0);
    return count;
}

} // namespace

// Declared in duality.hpp; lives here with the rest of the counting geometry.
SelfDualExistence self_dual_exists(const Spectrum& spec) {
    SelfDualExistence out;
    const Field* F = spec.field();
    for (size_t v = spec.s(); v < spec.t(); ++v) {
        if (spec.factor(v).tau < 1) {
            out.failed_clause = "reciprocal pair " + std::to_string(v + 1) + " has tau = 0";
            return out;
        }
        // both members must divide exactly the same blocks, else the slot
        // dimensions cannot pair up and no self-dual code exists
        if (spec.factor(v).eps != spec.factor(v).eps_dual) {
            out.failed_clause = "reciprocal pair " + std::to_string(v + 1) +
                                " has mismatched incidence rows";
            return out;
        }
    }
    for (size_t u = 0; u < spec.s(); ++u) {
        if (spec.factor(u).eps_sum % 2 != 0) {
            out.failed_clause =
                "self-reciprocal factor " + std::to_string(u + 1) + " has odd incidence count";
            return out;
        }
    }
    for (size_t u = 0; u < spec.s(); ++u) {
        const FactorInfo& fi = spec.factor(u);
        if (fi.degree != 1 || F->characteristic() == 2) continue;
        if (!orthogonal_plus_type(spec, fi)) {
            out.failed_clause = "(-1)^(eps/2)*disc(m/m_i) is a non-square for degree-one factor " +
                                std::to_string(u + 1);
            return out;
        }
    }
    // unpaired factors: a slot with a single supported block is forced to
    // zero and cannot split evenly; a two-block slot needs an isotropic line
    std::vector<size_t> deg2;
    for (size_t p = spec.t(); p < spec.e(); ++p) {
        const FactorInfo& fi = spec.factor(p);
        if (fi.eps_sum == 2) {
            deg2.push_back(p);
            continue;
        }
        out.failed_clause = "unpaired factor " + std::to_string(p + 1) +
                            (fi.eps_sum >= 3 ? " spans more than two blocks"
                                             : " cannot split into halves");
        return out;
    }
    if (!deg2.empty()) {
        auto slots = analyze_self_pairing(spec, deg2);
        if (count_configs(F, slots, true).is_zero()) {
            out.failed_clause = "self-pairing slots admit no compatible isotropic configuration";
            return out;
        }
    }
    out.exists = true;
    return out;
}

CensusReport census(const Spectrum& spec) {
    CensusReport rep;
    const uint64_t q = spec.field()->order();
    rep.existence = self_dual_exists(spec);
    rep.total = BigUint(1);
    rep.self_orthogonal = BigUint(1);
    BigUint sd(1);
    bool sd_computable = rep.existence.exists;
    std::vector<size_t> deg2;

    for (size_t w = 0; w < spec.factor_count(); ++w) {
        const FactorInfo& fi = spec.factor(w);
        FactorCensusRow row;
        row.w = w;
        row.cls = fi.cls;
        row.eps = fi.eps_sum;
        row.tau = fi.tau;
        row.degree = fi.degree;
        row.n_choices = num_subspaces(fi.eps_sum, BigUint(q).pow(fi.degree));
        rep.total = rep.total * row.n_choices;

        const BigUint Qw = BigUint(q).pow(fi.degree);
        switch (fi.cls) {
        case FactorClass::self_reciprocal: {
            std::string tag;
            const bool plus = (q % 2 == 1 && fi.degree == 1 && fi.eps_sum % 2 == 0)
                                  ? orthogonal_plus_type(spec, fi)
                                  : true;
            row.e_count = e_self_reciprocal(q, fi.degree, fi.eps_sum, plus, tag);
            row.case_tag = tag;
            rep.self_orthogonal = rep.self_orthogonal * *row.e_count;
            if (fi.eps_sum % 2 == 0 && (fi.degree > 1 || q % 2 == 0 || plus)) {
                std::string dtag;
                row.d_count = d_self_reciprocal(q, fi.degree, fi.eps_sum, dtag);
                if (sd_computable) sd = sd * *row.d_count;
            }
            break;
        }
        case FactorClass::pair_lead: {
            // 𝔇_v = N(τ_v, q^{d_v}); 𝔈_v = Σ_{k1} [τ ch k1] N(τ-k1)
            row.case_tag = "reciprocal pair";
            row.d_count = num_subspaces(fi.tau, Qw);
            BigUint e(0);
            for (unsigned k1 = 0; k1 <= fi.tau; ++k1)
                e += q_binomial(fi.tau, k1, Qw) * num_subspaces(fi.tau - k1, Qw);
            row.e_count = e;
            rep.self_orthogonal = rep.self_orthogonal * e;
            if (sd_computable) sd = sd * *row.d_count;
            break;
        }
        case FactorClass::pair_partner:
            row.case_tag = "pair partner (counted with its lead)";
            break;
        case FactorClass::unpaired:
            if (fi.eps_sum == 1) {
                row.case_tag = "unpaired, single block (zero forced)";
                row.e_count = BigUint(1);
            } else if (fi.eps_sum == 2) {
                row.case_tag = "unpaired, self-pairing slot";
                rep.self_pairing_slots = true;
                deg2.push_back(w);
            } else {
                row.case_tag = "unpaired, wide support (beyond closed form; zero assumed)";
                row.e_count = BigUint(1);
                rep.self_pairing_slots = true;
                rep.beyond_closed_form = true;
            }
            break;
        }
        rep.rows.push_back(std::move(row));
    }

    if (!deg2.empty()) {
        auto slots = analyze_self_pairing(spec, deg2);
        // per-slot rows are informational; the joint configuration count is
        // what multiplies into the totals (cross-slot pairings constrain it)
        for (size_t si = 0; si < slots.size(); ++si) {
            for (auto& row : rep.rows) {
                if (row.w == slots[si].w) {
                    row.e_count = BigUint(1 + slots[si].lines.size());
                    row.case_tag = "unpaired, self-pairing slot (" +
                                   std::to_string(slots[si].lines.size()) + " isotropic lines)";
                }
            }
        }
        rep.self_orthogonal =
            rep.self_orthogonal * count_configs(spec.field(), slots, false);
        if (sd_computable) sd = sd * count_configs(spec.field(), slots, true);
    }

    rep.self_dual = sd_computable ? sd : BigUint(0);
    return rep;
}

} // namespace mtx
