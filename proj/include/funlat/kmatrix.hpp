#ifndef FUNLAT_KMATRIX_HPP
#define FUNLAT_KMATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace funlat {

// Dense matrix over the coefficient field k.
template <class K>
struct KMat {
    using Elem = typename K::Elem;

    KMat(K field, std::size_t rows, std::size_t cols)
        : field(std::move(field)), rows(rows), cols(cols), a(rows * cols, this->field.zero()) {}

    Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static KMat identity(K field, std::size_t n) {
        KMat m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field.one();
        return m;
    }

    bool operator==(const KMat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!field.equal(a[i], o.a[i])) return false;
        return true;
    }

    K field;
    std::size_t rows, cols;
    std::vector<Elem> a;
};

template <class K>
struct EchelonResult {
    KMat<K> transform;  // P, unit lower triangular: P*M = echelon
    KMat<K> echelon;    // M', row echelon up to row order; dependent rows are zero
    std::size_t rank;
    std::vector<std::size_t> zero_rows;  // indices of zero rows of M', ascending
};

// Gaussian elimination without row swaps or pivot normalization: each row is
// reduced against the pivot rows found above it, so P is unit lower
// triangular and every zero row of M' encodes a dependency of that row on
// strictly earlier ones. Pivots are the first nonzero entry of each
// surviving row, scanned top to bottom.
template <class K>
EchelonResult<K> echelon_with_transform(const KMat<K>& m) {
    check(m.rows > 0 && m.cols > 0, "echelon of empty matrix");
    const K& k = m.field;

    EchelonResult<K> res{KMat<K>::identity(k, m.rows), m, 0, {}};
    auto& P = res.transform;
    auto& M = res.echelon;

    // (pivot column, pivot row), kept sorted by column.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;

    for (std::size_t i = 0; i < m.rows; ++i) {
        for (auto [pc, pr] : pivots) {
            if (k.is_zero(M.at(i, pc))) continue;
            auto c = k.div(M.at(i, pc), M.at(pr, pc));
            for (std::size_t j = pc; j < m.cols; ++j)
                M.at(i, j) = k.sub(M.at(i, j), k.mul(c, M.at(pr, j)));
            for (std::size_t j = 0; j <= pr; ++j)
                P.at(i, j) = k.sub(P.at(i, j), k.mul(c, P.at(pr, j)));
        }
        std::size_t lead = m.cols;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!k.is_zero(M.at(i, j))) { lead = j; break; }
        if (lead == m.cols) {
            res.zero_rows.push_back(i);
        } else {
            auto pos = pivots.begin();
            while (pos != pivots.end() && pos->first < lead) ++pos;
            pivots.insert(pos, {lead, i});
        }
    }
    res.rank = pivots.size();
    return res;
}

}  // namespace funlat

#endif
