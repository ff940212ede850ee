#pragma once

#include "tropcurve/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tropcurve {

struct IntVector {
    std::vector<Int> entries;

    IntVector() = default;
    explicit IntVector(std::vector<Int> e) : entries(std::move(e)) {}
    IntVector(std::initializer_list<long long> xs) {
        for (long long x : xs) entries.emplace_back(x);
    }

    std::size_t dim() const { return entries.size(); }
    bool is_zero() const {
        for (const Int& x : entries)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const IntVector& o) const { return entries == o.entries; }
};

inline Int gcd_of_entries(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v.entries) g = int_gcd(g, x);
    return g;
}

inline IntVector primitive_part(const IntVector& v) {
    if (v.dim() == 0 || v.is_zero()) throw std::invalid_argument("zero direction");
    Int g = gcd_of_entries(v);
    IntVector out = v;
    for (Int& x : out.entries) x /= g;
    return out;
}

namespace detail {

// Fraction-free determinant (Bareiss) of a square Int matrix.
inline Int det_int(std::vector<std::vector<Int>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline std::size_t rank_int(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Int a = m[r][c], b = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
        }
        ++r;
    }
    return r;
}

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename F>
inline bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (f(idx)) return true;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return false;
        }
        if (idx[i] == i + n - k) return false;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<std::vector<Int>> as_matrix(const std::vector<IntVector>& vs) {
    std::vector<std::vector<Int>> m;
    m.reserve(vs.size());
    for (const IntVector& v : vs) m.push_back(v.entries);
    return m;
}

}  // namespace detail

inline std::size_t linear_rank(const std::vector<IntVector>& vs) {
    return detail::rank_int(detail::as_matrix(vs));
}

// The span of vs is a saturated sublattice of Z^dim iff the gcd of all
// r x r minors equals 1, where r is the linear rank.
inline bool is_saturated(const std::vector<IntVector>& vs) {
    if (vs.empty()) return true;
    std::size_t d = vs[0].dim();
    for (const IntVector& v : vs)
        if (v.dim() != d) throw std::invalid_argument("mixed dimensions");
    auto m = detail::as_matrix(vs);
    std::size_t r = detail::rank_int(m);
    if (r == 0) return true;

    Int g = 0;
    bool hit_one = detail::for_each_combination(vs.size(), r, [&](const std::vector<std::size_t>& ri) {
        return detail::for_each_combination(d, r, [&](const std::vector<std::size_t>& ci) {
            std::vector<std::vector<Int>> sub(r, std::vector<Int>(r));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sub[i][j] = m[ri[i]][ci[j]];
            g = int_gcd(g, detail::det_int(sub));
            return g == 1;
        });
    });
    return hit_one || g == 1;
}

// First k-subset (in lexicographic index order) spanning a saturated lattice
// of rank k. Callers order the candidates by preference.
inline bool lattice_family_search(const std::vector<std::vector<Int>>& dirs, std::size_t k,
                                  std::vector<std::size_t>& out) {
    return detail::for_each_combination(dirs.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> sub;
        sub.reserve(k);
        for (std::size_t i : idx) sub.push_back(IntVector{dirs[i]});
        if (linear_rank(sub) != k || !is_saturated(sub)) return false;
        out = idx;
        return true;
    });
}

// max{k : some k-subset of vs spans a saturated lattice of rank k}.
inline std::size_t max_saturated_rank_subset(const std::vector<IntVector>& vs) {
    if (vs.size() > 16) throw std::invalid_argument("degree cap exceeded");
    if (vs.empty()) return 0;
    std::size_t top = std::min(vs[0].dim(), vs.size());
    top = std::min(top, linear_rank(vs));
    for (std::size_t k = top; k >= 1; --k) {
        bool found = detail::for_each_combination(vs.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<IntVector> sub;
            sub.reserve(k);
            for (std::size_t i : idx) sub.push_back(vs[i]);
            return linear_rank(sub) == k && is_saturated(sub);
        });
        if (found) return k;
    }
    return 0;
}

}  // namespace tropcurve
