#include "mtx/linalg.hpp"

#include <algorithm>
#include <string>

namespace mtx {

std::vector<FieldElement> FqMat::row_elems(size_t i) const {
    std::vector<FieldElement> out;
    out.reserve(cols);
    for (uint32_t v : rows[i]) out.push_back(f->from_index(v));
    return out;
}

std::vector<uint32_t> FqMat::to_indices(const Field* f, const std::vector<FieldElement>& v) {
    std::vector<uint32_t> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(static_cast<uint32_t>(f->index_of(e)));
    return out;
}

size_t rref(FqMat& m, std::vector<size_t>* pivot_cols) {
    const FieldOps& ops = m.f->ops();
    size_t rank = 0;
    if (pivot_cols) pivot_cols->clear();
    for (size_t c = 0; c < m.cols && rank < m.nrows(); ++c) {
        size_t sel = rank;
        while (sel < m.nrows() && m.rows[sel][c] == 0) ++sel;
        if (sel == m.nrows()) continue;
        std::swap(m.rows[sel], m.rows[rank]);
        const uint32_t inv = ops.inv(m.rows[rank][c]);
        if (inv != 1 || m.rows[rank][c] != 1) {
            for (auto& v : m.rows[rank]) v = ops.mul(v, inv);
        }
        for (size_t r = 0; r < m.nrows(); ++r) {
            if (r == rank) continue;
            const uint32_t fct = m.rows[r][c];
            if (!fct) continue;
            for (size_t j = c; j < m.cols; ++j)
                m.rows[r][j] = ops.sub(m.rows[r][j], ops.mul(fct, m.rows[rank][j]));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++rank;
    }
    m.rows.resize(rank);
    return rank;
}

bool reduce_row(const FqMat& rref_m, const std::vector<size_t>& pivots,
                std::vector<uint32_t>& row) {
    const FieldOps& ops = rref_m.f->ops();
    for (size_t r = 0; r < rref_m.nrows(); ++r) {
        const uint32_t fct = row[pivots[r]];
        if (!fct) continue;
        for (size_t j = pivots[r]; j < rref_m.cols; ++j)
            row[j] = ops.sub(row[j], ops.mul(fct, rref_m.rows[r][j]));
    }
    for (uint32_t v : row)
        if (v) return false;
    return true;
}

size_t rank_of(FqMat m) { return rref(m); }

FqMat nullspace(const FqMat& m_in) {
    FqMat m = m_in;
    std::vector<size_t> pivots;
    rref(m, &pivots);
    const FieldOps& ops = m.f->ops();
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    FqMat out(m.f, m.cols);
    for (size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> y(m.cols, 0);
        y[fc] = 1;
        for (size_t r = 0; r < m.nrows(); ++r) y[pivots[r]] = ops.neg(m.rows[r][fc]);
        out.add_row(std::move(y));
    }
    return out;
}

FqMat row_intersection(const FqMat& a, const FqMat& b) {
    require(a.f == b.f && a.cols == b.cols, "row_intersection: shape mismatch");
    // Zassenhaus: rows [A | A], [B | 0]; rref; rows with zero left half carry a
    // basis of the intersection in the right half.
    FqMat big(a.f, 2 * a.cols);
    for (const auto& r : a.rows) {
        std::vector<uint32_t> v(2 * a.cols, 0);
        std::copy(r.begin(), r.end(), v.begin());
        std::copy(r.begin(), r.end(), v.begin() + static_cast<long>(a.cols));
        big.add_row(std::move(v));
    }
    for (const auto& r : b.rows) {
        std::vector<uint32_t> v(2 * a.cols, 0);
        std::copy(r.begin(), r.end(), v.begin());
        big.add_row(std::move(v));
    }
    rref(big);
    FqMat out(a.f, a.cols);
    for (const auto& r : big.rows) {
        bool left_zero = true;
        for (size_t j = 0; j < a.cols && left_zero; ++j) left_zero = (r[j] == 0);
        if (!left_zero) continue;
        std::vector<uint32_t> v(r.begin() + static_cast<long>(a.cols), r.end());
        bool nonzero = false;
        for (uint32_t x : v) nonzero |= (x != 0);
        if (nonzero) out.add_row(std::move(v));
    }
    rref(out);
    return out;
}

bool same_rowspace(FqMat a, FqMat b) {
    rref(a);
    rref(b);
    return a.rows == b.rows;
}

bool rowspace_contains(FqMat space, const std::vector<uint32_t>& row) {
    std::vector<size_t> pivots;
    rref(space, &pivots);
    std::vector<uint32_t> r = row;
    return reduce_row(space, pivots, r);
}

uint32_t dot(const Field* f, const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const FieldOps& ops = f->ops();
    uint32_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc = ops.add(acc, ops.mul(a[i], b[i]));
    return acc;
}

std::string rowspace_signature(FqMat m) {
    rref(m);
    std::string s;
    s.reserve(m.nrows() * m.cols * 3 + 8);
    s += std::to_string(m.cols) + ";";
    for (const auto& r : m.rows) {
        for (uint32_t v : r) {
            s += std::to_string(v);
            s += ',';
        }
        s += '|';
    }
    return s;
}

namespace {

void enumerate_dim(const Field* f, const std::vector<size_t>& coords, size_t b,
                   const std::function<void(const FqMat&)>& visit, size_t full_cols) {
    const size_t k = coords.size();
    // choose pivot positions among the usable coordinates
    std::vector<size_t> piv(b);
    std::function<void(size_t, size_t)> choose = [&](size_t idx, size_t from) {
        if (idx == b) {
            // free entries: row r, usable coordinate c with c > piv[r], c not a pivot
            std::vector<std::pair<size_t, size_t>> free_pos;
            std::vector<bool> is_piv(k, false);
            for (size_t r = 0; r < b; ++r) is_piv[piv[r]] = true;
            for (size_t r = 0; r < b; ++r)
                for (size_t c = piv[r] + 1; c < k; ++c)
                    if (!is_piv[c]) free_pos.emplace_back(r, c);
            const uint64_t q = f->order();
            std::vector<uint32_t> assign(free_pos.size(), 0);
            while (true) {
                FqMat m(f, full_cols);
                for (size_t r = 0; r < b; ++r) {
                    std::vector<uint32_t> row(full_cols, 0);
                    row[coords[piv[r]]] = 1;
                    m.add_row(std::move(row));
                }
                for (size_t i = 0; i < free_pos.size(); ++i)
                    m.rows[free_pos[i].first][coords[free_pos[i].second]] = assign[i];
                visit(m);
                // odometer
                size_t i = 0;
                while (i < assign.size()) {
                    if (++assign[i] < q) break;
                    assign[i] = 0;
                    ++i;
                }
                if (i == assign.size()) break;
                if (assign.empty()) break;
            }
            return;
        }
        for (size_t c = from; c + (b - idx) <= k; ++c) {
            piv[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    if (b == 0) {
        FqMat m(f, full_cols);
        visit(m);
        return;
    }
    choose(0, 0);
}

} // namespace

void enumerate_subspaces_masked(const Field* f, size_t ncols, const std::vector<int>& mask,
                                const std::function<void(const FqMat&)>& visit) {
    std::vector<size_t> coords;
    for (size_t i = 0; i < ncols; ++i)
        if (mask[i]) coords.push_back(i);
    for (size_t b = 0; b <= coords.size(); ++b) enumerate_dim(f, coords, b, visit, ncols);
}

void enumerate_subspaces(const Field* f, size_t ncols,
                         const std::function<void(const FqMat&)>& visit) {
    enumerate_subspaces_masked(f, ncols, std::vector<int>(ncols, 1), visit);
}

} // namespace mtx
