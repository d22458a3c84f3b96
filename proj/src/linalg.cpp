#include "vbs/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace vbs {

namespace {

using IntRow = std::map<Config, Integer>;

IntRow clear_denominators(const SparseVec& row) {
    Integer lcm = 1;
    for (const auto& [k, v] : row) {
        if (v == 0) continue;
        Integer l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        lcm = l;
    }
    IntRow out;
    for (const auto& [k, v] : row) {
        if (v == 0) continue;
        Rational scaled = v * Rational(lcm);
        assert(scaled.get_den() == 1);
        out[k] = scaled.get_num();
    }
    return out;
}

}  // namespace

long rank_fraction_free(const std::vector<SparseVec>& rows) {
    std::vector<IntRow> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        IntRow ir = clear_denominators(r);
        if (!ir.empty()) m.push_back(std::move(ir));
    }

    long rank = 0;
    Integer prev = 1;
    while (!m.empty()) {
        // pivot column: smallest key present; pivot row: sparsest among those
        const Config* pc = nullptr;
        for (const auto& r : m)
            if (pc == nullptr || r.begin()->first < *pc) pc = &r.begin()->first;
        Config col = *pc;

        size_t pi = m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i].count(col) && (pi == m.size() || m[i].size() < m[pi].size())) pi = i;
        }
        assert(pi < m.size());
        IntRow pivot = std::move(m[pi]);
        m.erase(m.begin() + pi);
        Integer p = pivot.at(col);
        ++rank;

        // one-step elimination: every remaining entry is scaled by p, reduced
        // against the pivot row, and divided exactly by the previous pivot
        std::vector<IntRow> next;
        next.reserve(m.size());
        for (auto& r : m) {
            Integer f = 0;
            if (auto it = r.find(col); it != r.end()) {
                f = it->second;
                r.erase(it);
            }
            IntRow nr;
            auto put = [&](const Config& k, Integer v) {
                assert(mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()));
                Integer q;
                mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                if (q != 0) nr.emplace(k, std::move(q));
            };
            if (f == 0) {
                for (auto& [k, v] : r) put(k, v * p);
            } else {
                auto it = r.begin();
                auto jt = pivot.begin();
                while (it != r.end() || jt != pivot.end()) {
                    if (jt == pivot.end() || (it != r.end() && it->first < jt->first)) {
                        put(it->first, it->second * p);
                        ++it;
                    } else if (it == r.end() || jt->first < it->first) {
                        if (jt->first != col) put(jt->first, -f * jt->second);
                        ++jt;
                    } else {
                        put(it->first, it->second * p - f * jt->second);
                        ++it;
                        ++jt;
                    }
                }
            }
            if (!nr.empty()) next.push_back(std::move(nr));
        }
        m = std::move(next);
        prev = p;
    }
    return rank;
}

namespace {

// Gauss-Jordan over the rationals on a dense matrix with few columns.
// Returns reduced rows plus the pivot column of each.
struct Reduced {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivot_col;
};

Reduced reduce(std::vector<std::vector<Rational>> mat, int ncols) {
    Reduced out;
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(mat.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(mat.size()); ++i)
            if (mat[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(mat[r], mat[sel]);
        Rational inv = 1 / mat[r][c];
        for (auto& x : mat[r]) x *= inv;
        for (int i = 0; i < static_cast<int>(mat.size()); ++i) {
            if (i == r || mat[i][c] == 0) continue;
            Rational f = mat[i][c];
            for (int k = c; k < ncols; ++k) mat[i][k] -= f * mat[r][k];
        }
        out.pivot_col.push_back(c);
        ++r;
    }
    mat.resize(r);
    out.rows = std::move(mat);
    return out;
}

std::vector<std::vector<Rational>> dense_from_columns(const std::vector<const SparseVec*>& cols,
                                                      const SparseVec* extra) {
    std::map<Config, size_t> row_of;
    for (const auto* c : cols)
        for (const auto& [k, v] : *c) row_of.emplace(k, 0);
    if (extra)
        for (const auto& [k, v] : *extra) row_of.emplace(k, 0);
    size_t n = 0;
    for (auto& [k, idx] : row_of) idx = n++;

    size_t w = cols.size() + (extra ? 1 : 0);
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(w, Rational(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, v] : *cols[j]) mat[row_of[k]][j] = v;
    if (extra)
        for (const auto& [k, v] : *extra) mat[row_of[k]][cols.size()] = v;
    return mat;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace_of_columns(const std::vector<SparseVec>& cols) {
    std::vector<const SparseVec*> ptrs;
    ptrs.reserve(cols.size());
    for (const auto& c : cols) ptrs.push_back(&c);
    int w = static_cast<int>(cols.size());
    Reduced red = reduce(dense_from_columns(ptrs, nullptr), w);

    std::vector<bool> is_pivot(w, false);
    for (int c : red.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < w; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> x(w, Rational(0));
        x[fc] = 1;
        for (size_t i = 0; i < red.pivot_col.size(); ++i) x[red.pivot_col[i]] = -red.rows[i][fc];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool in_span(const std::vector<const SparseVec*>& cols, const SparseVec& target) {
    int w = static_cast<int>(cols.size());
    Reduced with = reduce(dense_from_columns(cols, &target), w + 1);
    for (int c : with.pivot_col)
        if (c == w) return false;
    return true;
}

}  // namespace vbs
