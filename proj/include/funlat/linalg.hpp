#ifndef FUNLAT_LINALG_HPP
#define FUNLAT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "poly.hpp"
#include "ratfun.hpp"

namespace funlat {

template <class K>
using PolyMatrix = std::vector<std::vector<Poly<K>>>;
template <class K>
using RatFunMatrix = std::vector<std::vector<RatFun<K>>>;

// Determinant of a square polynomial matrix by fraction-free (Bareiss)
// elimination; all interior divisions are exact.
template <class K>
Poly<K> det_poly_matrix(PolyMatrix<K> m, const K& field) {
    const std::size_t n = m.size();
    check(n > 0, "determinant of empty matrix");
    for (const auto& row : m) check(row.size() == n, "determinant of non-square matrix");

    bool negate = false;
    Poly<K> prev = Poly<K>::constant(field, field.one());
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return Poly<K>(field);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                auto t = m[c][c] * m[i][j] - m[i][c] * m[c][j];
                auto [q, r] = divmod(t, prev);
                check(r.is_zero(), "Bareiss division not exact");
                m[i][j] = std::move(q);
            }
            m[i][c] = Poly<K>(field);
        }
        prev = m[c][c];
    }
    auto d = m[n - 1][n - 1];
    return negate ? -d : d;
}

// Determinant over K = k(t): rows are cleared to polynomials first, then
// Bareiss, then the row multipliers are divided back out.
template <class K>
RatFun<K> det_ratfun_matrix(const RatFunMatrix<K>& m, const K& field) {
    const std::size_t n = m.size();
    check(n > 0, "determinant of empty matrix");

    PolyMatrix<K> pm(n);
    Poly<K> denom = Poly<K>::constant(field, field.one());
    for (std::size_t i = 0; i < n; ++i) {
        check(m[i].size() == n, "determinant of non-square matrix");
        Poly<K> l = Poly<K>::constant(field, field.one());
        for (const auto& x : m[i]) l = lcm(l, x.den());
        pm[i].reserve(n);
        for (const auto& x : m[i]) pm[i].push_back(x.num() * (l / x.den()));
        denom = denom * l;
    }
    return RatFun<K>(det_poly_matrix(std::move(pm), field), std::move(denom));
}

// Rank over K of a (not necessarily square) matrix of rational functions.
template <class K>
std::size_t rank_ratfun_matrix(RatFunMatrix<K> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        auto inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            auto f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

template <class K>
RatFunMatrix<K> ratfun_matrix_mul(const RatFunMatrix<K>& a, const RatFunMatrix<K>& b, const K& field) {
    const std::size_t n = a.size(), m = b[0].size(), inner = b.size();
    RatFunMatrix<K> r(n, std::vector<RatFun<K>>(m, RatFun<K>::zero(field)));
    for (std::size_t i = 0; i < n; ++i) {
        check(a[i].size() == inner, "matrix product dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

}  // namespace funlat

#endif
