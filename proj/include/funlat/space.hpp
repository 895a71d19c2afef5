#ifndef FUNLAT_SPACE_HPP
#define FUNLAT_SPACE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "extrational.hpp"
#include "linalg.hpp"
#include "ratfun.hpp"

namespace funlat {

// Length class modulo Z, canonicalized to a residue in [0,1).
class SignatureClass {
public:
    explicit SignatureClass(const mpq_class& r) : residue_(r) {
        residue_.canonicalize();
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), residue_.get_num().get_mpz_t(), residue_.get_den().get_mpz_t());
        residue_ -= mpq_class(fl);
    }

    const mpq_class& residue() const { return residue_; }

    bool operator==(const SignatureClass& o) const { return residue_ == o.residue_; }
    bool operator<(const SignatureClass& o) const { return residue_ < o.residue_; }

    std::string str() const {
        if (residue_.get_den() == 1) return residue_.get_num().get_str();
        return residue_.get_num().get_str() + "/" + residue_.get_den().get_str();
    }

private:
    mpq_class residue_;
};

inline SignatureClass signature_class(const ExtRational& r) {
    if (r.is_minus_infinity())
        fail(errc::minus_infinity, "signature class of -infinity");
    return SignatureClass(r.value());
}

// A normed space presented by its shift vector: E = K(r_1) _|_ ... _|_ K(r_n),
// with ||(a_1,...,a_n)|| = max_j |a_j| + r_j.
struct ShiftedSpace {
    std::vector<mpq_class> shifts;

    explicit ShiftedSpace(std::vector<mpq_class> s) : shifts(std::move(s)) {
        check(!shifts.empty(), "shifted space needs at least one coordinate");
        for (auto& q : shifts) q.canonicalize();
    }

    std::size_t dim() const { return shifts.size(); }

    // -1 < r_1 <= ... <= r_n <= 0
    bool is_normalized() const {
        for (std::size_t i = 0; i < shifts.size(); ++i) {
            if (!(shifts[i] > -1 && shifts[i] <= 0)) return false;
            if (i > 0 && shifts[i] < shifts[i - 1]) return false;
        }
        return true;
    }

    bool operator==(const ShiftedSpace& o) const { return shifts == o.shifts; }
};

template <class K>
ExtRational norm(const ShiftedSpace& space, const std::vector<RatFun<K>>& v) {
    if (v.size() != space.dim())
        fail(errc::dimension_mismatch, "vector length does not match space dimension");
    ExtRational best = ExtRational::minus_infinity();
    for (std::size_t j = 0; j < v.size(); ++j) {
        auto d = v[j].degree() + ExtRational(mpq_class(space.shifts[j]));
        if (d > best) best = d;
    }
    return best;
}

// The unique integer-valued norm equivalent to ||.||.
template <class K>
ExtRational ceil_norm(const ShiftedSpace& space, const std::vector<RatFun<K>>& v) {
    return ceil_of(norm(space, v));
}

struct NormalizedSpace {
    ShiftedSpace space;            // shifts sorted into (-1, 0]
    std::vector<long> scale;       // per original coordinate: r'_i = r_i + scale_i
    std::vector<std::size_t> perm; // space.shifts[i] came from original coordinate perm[i]
};

// Fold every shift into (-1, 0] and stably sort. The isometry onto the
// normalized space multiplies original coordinate i by t^{-scale_i} and then
// permutes coordinates into sorted order.
inline NormalizedSpace normalize_shifts(const ShiftedSpace& space) {
    const std::size_t n = space.dim();
    std::vector<long> scale(n);
    std::vector<mpq_class> folded(n);
    for (std::size_t i = 0; i < n; ++i) {
        scale[i] = -ExtRational(space.shifts[i]).ceil();
        folded[i] = space.shifts[i] + scale[i];
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return folded[a] < folded[b]; });
    std::vector<mpq_class> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = folded[perm[i]];
    return {ShiftedSpace(std::move(sorted)), std::move(scale), std::move(perm)};
}

template <class K>
std::vector<RatFun<K>> apply_normalization(const NormalizedSpace& ns,
                                           const std::vector<RatFun<K>>& row) {
    check(row.size() == ns.perm.size(), "normalization row size mismatch");
    std::vector<RatFun<K>> out;
    out.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        std::size_t src = ns.perm[i];
        out.push_back(row[src].mul_t_power(-ns.scale[src]));
    }
    return out;
}

// Distinct shift values of a normalized space, with their coordinate blocks.
struct ShiftClass {
    mpq_class shift;
    SignatureClass cls;
    std::vector<std::size_t> cols;
};

inline std::vector<ShiftClass> shift_classes(const ShiftedSpace& space) {
    check(space.is_normalized(), "shift classes need a normalized space");
    std::vector<ShiftClass> out;
    for (std::size_t j = 0; j < space.dim(); ++j) {
        if (!out.empty() && out.back().shift == space.shifts[j]) {
            out.back().cols.push_back(j);
        } else {
            out.push_back({space.shifts[j], SignatureClass(space.shifts[j]), {j}});
        }
    }
    return out;
}

// Multiplicities (m_1,...,m_kappa) of the distinct normalized shifts.
struct Partition {
    std::vector<std::size_t> m;

    std::size_t total() const {
        std::size_t s = 0;
        for (auto v : m) s += v;
        return s;
    }
};

inline Partition partition_of(const ShiftedSpace& space) {
    Partition p;
    for (const auto& c : shift_classes(space)) p.m.push_back(c.cols.size());
    return p;
}

// Membership in the orthonormal group O(m_1,...,m_kappa, A_infty): entries in
// A_infty, diagonal blocks with unit determinant, upper blocks inside m_infty.
template <class K>
bool is_orthonormal_group_member(const RatFunMatrix<K>& T, const Partition& partition,
                                 const K& field) {
    const std::size_t n = T.size();
    if (partition.total() != n)
        fail(errc::dimension_mismatch, "partition does not sum to matrix dimension");
    for (const auto& row : T)
        if (row.size() != n) fail(errc::dimension_mismatch, "orthonormal group needs a square matrix");

    for (const auto& row : T)
        for (const auto& x : row)
            if (x.degree() > ExtRational(0)) return false;

    std::vector<std::size_t> offset{0};
    for (auto m : partition.m) offset.push_back(offset.back() + m);

    for (std::size_t bi = 0; bi < partition.m.size(); ++bi) {
        for (std::size_t bj = bi + 1; bj < partition.m.size(); ++bj) {
            for (std::size_t i = offset[bi]; i < offset[bi + 1]; ++i)
                for (std::size_t j = offset[bj]; j < offset[bj + 1]; ++j)
                    if (!(T[i][j].degree() < ExtRational(0))) return false;
        }
        RatFunMatrix<K> block;
        for (std::size_t i = offset[bi]; i < offset[bi + 1]; ++i)
            block.emplace_back(T[i].begin() + offset[bi], T[i].begin() + offset[bi + 1]);
        auto d = det_ratfun_matrix(block, field);
        if (!(d.degree() == ExtRational(0))) return false;
    }
    return true;
}

}  // namespace funlat

#endif
