#ifndef FUNLAT_ANALYSIS_HPP
#define FUNLAT_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "reduce.hpp"

namespace funlat {

template <class K>
mpq_class volume_basis(const LatticeBasis<K>& basis) {
    mpq_class v = 0;
    for (const auto& l : basis.lengths) {
        if (l.is_minus_infinity()) fail(errc::zero_row, "volume of a basis with a zero row");
        v += l.value();
    }
    return v;
}

inline mpq_class volume_space(const ShiftedSpace& space) {
    check(space.is_normalized(), "volume_space needs a normalized space");
    mpq_class v = 0;
    for (const auto& s : space.shifts) v += s;
    return v;
}

// Degree of the determinant ideal d(B). Over a normalized space the standard
// basis is orthonormal, so this is just |det(rows)|.
template <class K>
long det_degree(const LatticeBasis<K>& basis) {
    check(basis.space.is_normalized(), "det_degree needs a normalized space");
    auto d = det_ratfun_matrix(basis.rows, basis.field);
    if (d.is_zero()) fail(errc::singular_basis, "determinant of dependent rows");
    return d.degree().ceil();
}

template <class K>
mpq_class orthogonal_defect(const LatticeBasis<K>& basis) {
    return volume_basis(basis) - volume_space(basis.space) - det_degree(basis);
}

struct InvariantReport {
    mpq_class vol_basis;
    mpq_class vol_space;
    long det_deg;
    mpq_class od;
};

template <class K>
InvariantReport invariant_report(const LatticeBasis<K>& basis) {
    InvariantReport r;
    r.vol_basis = volume_basis(basis);
    r.vol_space = volume_space(basis.space);
    r.det_deg = det_degree(basis);
    r.od = r.vol_basis - r.vol_space - r.det_deg;
    return r;
}

template <class K>
struct MinimaReport {
    std::vector<mpq_class> sm;               // ascending successive minima
    std::vector<SignatureClass> sm_classes;  // their classes mod Z, with multiplicity
    RatFunMatrix<K> witnesses;               // reduced rows attaining them
};

template <class K>
MinimaReport<K> successive_minima(const LatticeBasis<K>& basis) {
    auto red = reduce_general(basis);
    MinimaReport<K> rep;
    for (const auto& l : red.basis.lengths) {
        rep.sm.push_back(l.value());
        rep.sm_classes.push_back(signature_class(l));
    }
    rep.witnesses = std::move(red.basis.rows);

    // sm classes must reproduce the shift-class multiset of the space
    auto want = rep.sm_classes;
    std::vector<SignatureClass> have;
    for (const auto& s : basis.space.shifts) have.push_back(SignatureClass(s));
    auto by_residue = [](const SignatureClass& a, const SignatureClass& b) { return a < b; };
    std::sort(want.begin(), want.end(), by_residue);
    std::sort(have.begin(), have.end(), by_residue);
    check(want == have, "minima classes disagree with the space signature");
    return rep;
}

// k-basis of the sublattice L_{<=r} of a reduced basis: row i contributes
// t^j b_i for 0 <= j <= floor(r - ||b_i||).
template <class K>
RatFunMatrix<K> sublattice_basis_leq(const LatticeBasis<K>& basis, const mpq_class& r) {
    if (!is_reduced(basis)) fail(errc::not_reduced, "L_{<=r} basis requires a reduced input basis");
    RatFunMatrix<K> out;
    for (std::size_t i = 0; i < basis.n(); ++i) {
        auto gap = ExtRational(r) - basis.lengths[i];
        if (gap < ExtRational(0)) continue;
        long top = gap.floor();
        for (long j = 0; j <= top; ++j) {
            out.push_back(basis.rows[i]);
            for (auto& x : out.back()) x = x.mul_t_power(j);
        }
    }
    return out;
}

template <class K>
long dim_leq(const LatticeBasis<K>& basis, const mpq_class& r) {
    if (!is_reduced(basis)) fail(errc::not_reduced, "dim L_{<=r} requires a reduced input basis");
    long dim = 0;
    for (const auto& l : basis.lengths) {
        auto gap = ExtRational(r) - l;
        if (gap < ExtRational(0)) continue;
        dim += gap.floor() + 1;
    }
    return dim;
}

// dim L(D + r(t)_inf) from the lengths of a (semi-)reduced basis of the
// divisor lattice: sum of r - ceil||b_i|| + 1 over ceil||b_i|| <= r.
inline long riemann_roch_dim(const std::vector<mpq_class>& reduced_lengths, long r) {
    long dim = 0;
    for (const auto& l : reduced_lengths) {
        long c = ExtRational(l).ceil();
        if (c <= r) dim += r - c + 1;
    }
    return dim;
}

// ---------------------------------------------------------------------------
// Brute-force oracle over a finite field: enumerate all coefficient vectors
// (a_1,...,a_n) in A^n with deg a_i <= degree_bound, compute ||sum a_i b_i||,
// and greedily extract the minima over A-linearly independent families.

namespace detail {

struct OracleEnums {
    std::uint64_t p;
    std::size_t n;
    long bound;
    // column data: polynomial numerators per row, common denominator degree,
    // and scaled integer shift so norms compare as plain integers
    std::vector<std::vector<std::vector<std::uint64_t>>> num;  // [col][row][coeff]
    std::vector<long> scaled_shift;                            // D*(r_j - deg d_j)
    long denom_scale;                                          // D
    std::vector<std::pair<long, std::uint64_t>> keys;          // (D*norm, vector index)
};

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace detail

template <class K>
class BruteForceOracle {
    static_assert(std::is_same_v<K, GF>, "the brute-force oracle requires a finite field");

public:
    BruteForceOracle(const LatticeBasis<K>& basis, long degree_bound,
                     const mpq_class& max_query_norm)
        : basis_(basis) {
        ensure_nonsingular(basis);
        if (degree_bound < 0) fail(errc::bound_too_small, "negative degree bound");

        // sufficiency: |a_i| <= ||x|| + OD - min||b_i|| for everything queried
        mpq_class min_len = basis.lengths[0].value();
        mpq_class max_len = min_len;
        for (const auto& l : basis.lengths) {
            min_len = std::min(min_len, l.value());
            max_len = std::max(max_len, l.value());
        }
        mpq_class od = orthogonal_defect(basis);
        mpq_class needed = std::max(max_len, max_query_norm) + od - min_len;
        long needed_bound = ExtRational(needed).floor();
        if (degree_bound < needed_bound)
            fail(errc::bound_too_small,
                 "degree bound " + std::to_string(degree_bound) + " below sufficiency bound " +
                     std::to_string(needed_bound));

        build(degree_bound);
    }

    // Greedy extraction of the successive minima.
    std::vector<mpq_class> minima() const {
        const std::size_t n = basis_.n();
        std::vector<mpq_class> sm;
        RatFunMatrix<K> chosen;
        for (const auto& [key, idx] : e_.keys) {
            if (chosen.size() == n) break;
            auto cand = decode_row(idx);
            chosen.push_back(cand);
            if (rank_ratfun_matrix(chosen) != chosen.size()) {
                chosen.pop_back();
                continue;
            }
            sm.push_back(mpq_class(key, e_.denom_scale));
            sm.back().canonicalize();
        }
        check(sm.size() == n, "oracle failed to find n independent vectors");
        return sm;
    }

    // dim_k of the sublevel set L_{<=r}: the enumerated vectors of norm <= r
    // form a k-vector space of p^d - 1 nonzero elements.
    long dim_leq(const mpq_class& r) const {
        mpq_class scaled = r * e_.denom_scale;
        long threshold = ExtRational(scaled).floor();
        std::uint64_t count = 0;
        for (const auto& [key, idx] : e_.keys)
            if (key <= threshold) ++count;
        std::uint64_t total = count + 1;
        long d = 0;
        while (total > 1) {
            check(total % e_.p == 0, "sublevel count is not a p-power");
            total /= e_.p;
            ++d;
        }
        return d;
    }

private:
    void build(long bound) {
        const K& k = basis_.field;
        const std::size_t n = basis_.n();
        const std::uint64_t p = k.modulus();
        const unsigned digits = static_cast<unsigned>(n * (bound + 1));

        const std::uint64_t cap = 1ull << 22;
        std::uint64_t total = detail::checked_pow(p, digits, cap);
        if (total > cap)
            fail(errc::enumeration_too_large,
                 "oracle enumeration needs more than 2^22 vectors");

        e_.p = p;
        e_.n = n;
        e_.bound = bound;

        // per-column common denominator and polynomial numerators
        mpz_class dlcm = 1;
        std::vector<mpq_class> eff_shift(n);
        e_.num.assign(n, {});
        for (std::size_t j = 0; j < n; ++j) {
            Poly<K> dj = Poly<K>::constant(k, k.one());
            for (std::size_t i = 0; i < n; ++i) dj = lcm(dj, basis_.rows[i][j].den());
            eff_shift[j] = basis_.space.shifts[j] - (dj.is_zero() ? 0 : dj.deg());
            mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), eff_shift[j].get_den().get_mpz_t());
            e_.num[j].resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                auto poly = basis_.rows[i][j].num() * (dj / basis_.rows[i][j].den());
                e_.num[j][i] = poly.coeffs();
            }
        }
        check(dlcm.fits_slong_p(), "oracle shift denominator too large");
        e_.denom_scale = dlcm.get_si();
        e_.scaled_shift.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class s = eff_shift[j] * e_.denom_scale;
            e_.scaled_shift[j] = ExtRational(s).floor();
            check(mpq_class(e_.scaled_shift[j]) == s, "scaled shift not integral");
        }

        e_.keys.clear();
        e_.keys.reserve(total - 1);
        std::vector<std::uint64_t> acc;
        for (std::uint64_t v = 1; v < total; ++v) {
            long key = 0;
            bool any = false;
            for (std::size_t j = 0; j < n; ++j) {
                long deg = column_degree(v, j, acc);
                if (deg < 0) continue;
                long cand = e_.denom_scale * deg + e_.scaled_shift[j];
                if (!any || cand > key) key = cand;
                any = true;
            }
            check(any, "nonzero coefficients produced the zero vector");
            e_.keys.emplace_back(key, v);
        }
        std::sort(e_.keys.begin(), e_.keys.end());
    }

    // degree of sum_i a_i * num[j][i], or -1 when the sum is zero
    long column_degree(std::uint64_t v, std::size_t j, std::vector<std::uint64_t>& acc) const {
        const std::uint64_t p = e_.p;
        acc.assign(static_cast<std::size_t>(e_.bound) + 40, 0);
        std::size_t top = 0;
        std::uint64_t rest = v;
        for (std::size_t i = 0; i < e_.n; ++i) {
            for (long d = 0; d <= e_.bound; ++d) {
                std::uint64_t digit = rest % p;
                rest /= p;
                if (digit == 0) continue;
                const auto& poly = e_.num[j][i];
                for (std::size_t c = 0; c < poly.size(); ++c) {
                    std::size_t pos = static_cast<std::size_t>(d) + c;
                    if (pos >= acc.size()) acc.resize(pos + 1, 0);
                    acc[pos] = (acc[pos] + digit * poly[c]) % p;
                    top = std::max(top, pos);
                }
            }
        }
        for (std::size_t pos = top + 1; pos-- > 0;)
            if (acc[pos] != 0) return static_cast<long>(pos);
        return -1;
    }

    std::vector<RatFun<K>> decode_row(std::uint64_t v) const {
        const K& k = basis_.field;
        std::vector<RatFun<K>> row(basis_.n(), RatFun<K>::zero(k));
        std::uint64_t rest = v;
        std::vector<Poly<K>> coeff;
        for (std::size_t i = 0; i < e_.n; ++i) {
            std::vector<typename K::Elem> c(static_cast<std::size_t>(e_.bound) + 1, k.zero());
            for (long d = 0; d <= e_.bound; ++d) {
                c[static_cast<std::size_t>(d)] = rest % e_.p;
                rest /= e_.p;
            }
            coeff.emplace_back(k, std::move(c));
        }
        for (std::size_t j = 0; j < e_.n; ++j)
            for (std::size_t i = 0; i < e_.n; ++i)
                row[j] = row[j] + RatFun<K>(coeff[i]) * basis_.rows[i][j];
        return row;
    }

    const LatticeBasis<K>& basis_;
    detail::OracleEnums e_;
};

template <class K>
std::vector<mpq_class> oracle_successive_minima(const LatticeBasis<K>& basis, long degree_bound) {
    if constexpr (std::is_same_v<K, GF>) {
        mpq_class max_len = basis.lengths[0].is_minus_infinity()
                                ? mpq_class(0)
                                : basis.lengths[0].value();
        for (const auto& l : basis.lengths)
            if (!l.is_minus_infinity()) max_len = std::max(max_len, l.value());
        BruteForceOracle<K> oracle(basis, degree_bound, max_len);
        return oracle.minima();
    } else {
        fail(errc::field_not_finite, "brute-force oracle requires GF(p)");
    }
}

template <class K>
long oracle_dim_leq(const LatticeBasis<K>& basis, long degree_bound, const mpq_class& r) {
    if constexpr (std::is_same_v<K, GF>) {
        BruteForceOracle<K> oracle(basis, degree_bound, r);
        return oracle.dim_leq(r);
    } else {
        fail(errc::field_not_finite, "brute-force oracle requires GF(p)");
    }
}

}  // namespace funlat

#endif
