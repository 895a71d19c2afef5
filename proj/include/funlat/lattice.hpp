#ifndef FUNLAT_LATTICE_HPP
#define FUNLAT_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "kmatrix.hpp"
#include "space.hpp"

namespace funlat {

// A basis of a full-rank lattice: n rows of coordinate vectors over a
// shifted space, with cached row lengths. The reduction engine owns and
// mutates instances exclusively; everything else treats them as immutable.
template <class K>
struct LatticeBasis {
    K field;
    ShiftedSpace space;
    RatFunMatrix<K> rows;
    std::vector<ExtRational> lengths;

    LatticeBasis(K f, ShiftedSpace s, RatFunMatrix<K> r)
        : field(std::move(f)), space(std::move(s)), rows(std::move(r)) {
        if (rows.size() != space.dim())
            fail(errc::dimension_mismatch, "basis must have one row per space dimension");
        for (const auto& row : rows)
            if (row.size() != space.dim())
                fail(errc::dimension_mismatch, "basis rows must match space dimension");
        lengths.reserve(rows.size());
        for (const auto& row : rows) lengths.push_back(norm(space, row));
    }

    std::size_t n() const { return rows.size(); }

    void recompute_length(std::size_t i) { lengths[i] = norm(space, rows[i]); }
};

template <class K>
RatFun<K> det_of_rows(const LatticeBasis<K>& basis) {
    return det_ratfun_matrix(basis.rows, basis.field);
}

template <class K>
void ensure_nonsingular(const LatticeBasis<K>& basis) {
    if (det_of_rows(basis).is_zero())
        fail(errc::singular_basis, "basis rows are K-linearly dependent");
}

// One reduction step: a basis row replaced by a strictly shorter vector.
struct StepRecord {
    std::size_t row;
    SignatureClass pivot_class;
    ExtRational old_length;
    ExtRational new_length;
};

struct ReductionTrace {
    std::size_t steps = 0;
    std::size_t echelon_passes = 0;
    std::vector<StepRecord> records;
};

// The reduceness-criterion matrix of one signature class: rows are the basis
// rows of that class sorted by increasing length, columns the coordinate
// block of equal shifts, entries zc(t^{-ceil||b_i||} b_{i,j}).
template <class K>
struct ZcMatrix {
    KMat<K> mat;
    SignatureClass cls;
    std::vector<std::size_t> row_index;  // basis row behind each matrix row
    std::vector<long> row_t_power;       // m_b = ceil||b|| per matrix row
    std::vector<std::size_t> cols;       // coordinate block
};

template <class K>
std::vector<std::size_t> rows_in_class(const LatticeBasis<K>& basis, const SignatureClass& cls) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis.n(); ++i) {
        if (basis.lengths[i].is_minus_infinity()) continue;
        if (signature_class(basis.lengths[i]) == cls) idx.push_back(i);
    }
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return basis.lengths[a] < basis.lengths[b];
    });
    return idx;
}

template <class K>
ZcMatrix<K> build_zc_matrix(const LatticeBasis<K>& basis, const SignatureClass& cls) {
    check(basis.space.is_normalized(), "zc matrix needs a normalized space");

    std::vector<std::size_t> cols;
    for (const auto& sc : shift_classes(basis.space))
        if (sc.cls == cls) cols = sc.cols;
    auto idx = rows_in_class(basis, cls);
    if (idx.empty() || cols.empty())
        fail(errc::empty_class, "no basis row with signature class " + cls.str());

    KMat<K> m(basis.field, idx.size(), cols.size());
    std::vector<long> powers;
    powers.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        long mb = basis.lengths[idx[i]].ceil();
        powers.push_back(mb);
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(i, j) = zc_shifted(basis.rows[idx[i]][cols[j]], mb);
    }
    return ZcMatrix<K>{std::move(m), cls, std::move(idx), std::move(powers), std::move(cols)};
}

// Replace the basis row behind every zero row of the echelonized zc matrix
// by the corresponding combination b~ = b + sum p_{i,l} t^{m_i-m_l} b_l.
// Zero-row combinations only involve pivot rows, so all replacements of one
// pass commute.
template <class K>
void apply_reduction_steps(LatticeBasis<K>& basis, const ZcMatrix<K>& zcm,
                           const EchelonResult<K>& ech, ReductionTrace& trace,
                           PolyMatrix<K>* transition = nullptr) {
    if (ech.zero_rows.empty())
        fail(errc::no_zero_rows, "echelon transform has no zero rows to apply");
    const K& k = basis.field;

    for (std::size_t i : ech.zero_rows) {
        std::size_t target = zcm.row_index[i];
        ExtRational old_len = basis.lengths[target];
        for (std::size_t l = 0; l < i; ++l) {
            const auto& c = ech.transform.at(i, l);
            if (k.is_zero(c)) continue;
            long e = zcm.row_t_power[i] - zcm.row_t_power[l];
            check(e >= 0, "reduction step with negative t-power");
            std::size_t src = zcm.row_index[l];
            auto factor = RatFun<K>(Poly<K>::t_power(k, static_cast<unsigned>(e)).scaled(c));
            for (std::size_t j = 0; j < basis.n(); ++j)
                basis.rows[target][j] = basis.rows[target][j] + factor * basis.rows[src][j];
            if (transition) {
                auto pf = Poly<K>::t_power(k, static_cast<unsigned>(e)).scaled(c);
                for (std::size_t j = 0; j < basis.n(); ++j)
                    (*transition)[target][j] = (*transition)[target][j] + pf * (*transition)[src][j];
            }
        }
        basis.recompute_length(target);
        check(basis.lengths[target] < old_len, "reduction step failed to shorten the row");
        trace.records.push_back({target, zcm.cls, old_len, basis.lengths[target]});
        ++trace.steps;
    }
}

// Multiply column j by the lcm g_j of its denominators, making entries
// polynomial, and lower shift j by deg g_j. An isometry onto the new space.
template <class K>
struct ClearDenominatorsResult {
    LatticeBasis<K> basis;
    std::vector<Poly<K>> multipliers;
};

template <class K>
ClearDenominatorsResult<K> clear_denominators(const LatticeBasis<K>& basis) {
    const K& k = basis.field;
    const std::size_t n = basis.space.dim();

    std::vector<Poly<K>> g;
    g.reserve(n);
    std::vector<mpq_class> shifts = basis.space.shifts;
    for (std::size_t j = 0; j < n; ++j) {
        Poly<K> l = Poly<K>::constant(k, k.one());
        for (std::size_t i = 0; i < basis.rows.size(); ++i)
            l = lcm(l, basis.rows[i][j].den());
        if (!l.is_zero() && l.deg() > 0) shifts[j] -= l.deg();
        g.push_back(std::move(l));
    }
    RatFunMatrix<K> rows = basis.rows;
    for (auto& row : rows)
        for (std::size_t j = 0; j < n; ++j)
            row[j] = row[j] * RatFun<K>(g[j]);
    return {LatticeBasis<K>(k, ShiftedSpace(std::move(shifts)), std::move(rows)), std::move(g)};
}

// Driver-side preparation: clear denominators, then normalize the shifts.
// Records the composed column isometry so results can be mapped back to the
// coordinates of the input presentation.
template <class K>
struct PreparedLattice {
    LatticeBasis<K> basis;             // over a normalized space
    ShiftedSpace original_space;
    std::vector<std::size_t> pos;      // original column j sits at position pos[j]
    std::vector<RatFun<K>> mult;       // prepared entry = original entry * mult[j]
};

template <class K>
PreparedLattice<K> prepare_lattice(const K& field, const ShiftedSpace& space,
                                   const RatFunMatrix<K>& rows) {
    LatticeBasis<K> raw(field, space, rows);
    auto cleared = clear_denominators(raw);
    auto ns = normalize_shifts(cleared.basis.space);

    RatFunMatrix<K> prepared;
    prepared.reserve(rows.size());
    for (const auto& row : cleared.basis.rows)
        prepared.push_back(apply_normalization(ns, row));

    const std::size_t n = space.dim();
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[ns.perm[p]] = p;
    std::vector<RatFun<K>> mult;
    mult.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        mult.push_back(RatFun<K>(cleared.multipliers[j]).mul_t_power(-ns.scale[j]));

    return {LatticeBasis<K>(field, std::move(ns.space), std::move(prepared)),
            space, std::move(pos), std::move(mult)};
}

template <class K>
RatFunMatrix<K> unprepare_rows(const PreparedLattice<K>& prep, const RatFunMatrix<K>& rows) {
    const std::size_t n = prep.pos.size();
    RatFunMatrix<K> out(rows.size(), std::vector<RatFun<K>>());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            out[i].push_back(rows[i][prep.pos[j]] / prep.mult[j]);
    }
    return out;
}

}  // namespace funlat

#endif
