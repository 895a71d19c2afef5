#ifndef FUNLAT_REDUCE_HPP
#define FUNLAT_REDUCE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace funlat {

struct ReduceOptions {
    bool want_transition = false;  // accumulate R in GL_n(A) with R*input = output
};

template <class K>
struct ReduceResult {
    LatticeBasis<K> basis;
    ReductionTrace trace;
    std::optional<PolyMatrix<K>> transition;
};

namespace detail {

template <class K>
PolyMatrix<K> poly_identity(const K& k, std::size_t n) {
    PolyMatrix<K> m(n, std::vector<Poly<K>>(n, Poly<K>(k)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly<K>::constant(k, k.one());
    return m;
}

template <class K>
PolyMatrix<K> poly_matrix_mul(const PolyMatrix<K>& a, const PolyMatrix<K>& b, const K& k) {
    const std::size_t n = a.size();
    PolyMatrix<K> r(n, std::vector<Poly<K>>(n, Poly<K>(k)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[l][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][l] * b[l][j];
            }
        }
    return r;
}

// Floor of the orthogonal defect, used for the step-count safety cap.
template <class K>
long od_floor(const LatticeBasis<K>& basis, long det_degree) {
    mpq_class vol = 0;
    for (const auto& l : basis.lengths) vol += l.value();
    for (const auto& s : basis.space.shifts) vol -= s;
    vol -= det_degree;
    return ExtRational(vol).floor();
}

// Stable final sort by increasing length, applied to rows, cache, and the
// accumulated transition matrix alike.
template <class K>
void sort_rows(LatticeBasis<K>& basis, std::optional<PolyMatrix<K>>& transition) {
    const std::size_t n = basis.n();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return basis.lengths[a] < basis.lengths[b];
    });
    RatFunMatrix<K> rows;
    std::vector<ExtRational> lengths;
    rows.reserve(n);
    lengths.reserve(n);
    PolyMatrix<K> trans;
    for (std::size_t i : order) {
        rows.push_back(std::move(basis.rows[i]));
        lengths.push_back(basis.lengths[i]);
        if (transition) trans.push_back(std::move((*transition)[i]));
    }
    basis.rows = std::move(rows);
    basis.lengths = std::move(lengths);
    if (transition) *transition = std::move(trans);
}

}  // namespace detail

// Reduceness criterion: every signature class of the space is populated by
// exactly its multiplicity of basis rows, and their zc matrix has full rank.
template <class K>
bool is_reduced(const LatticeBasis<K>& basis) {
    check(basis.space.is_normalized(), "is_reduced needs a normalized space");
    ensure_nonsingular(basis);
    for (const auto& sc : shift_classes(basis.space)) {
        auto idx = rows_in_class(basis, sc.cls);
        if (idx.size() != sc.cols.size()) return false;
        auto zcm = build_zc_matrix(basis, sc.cls);
        if (echelon_with_transform(zcm.mat).rank != sc.cols.size()) return false;
    }
    return true;
}

// Reduceness with respect to the ceiling norm. On a normalized space the
// ceiling norm is the norm of K^n, so there is a single class and the
// criterion matrix runs over all n coordinates.
template <class K>
bool is_semi_reduced(const LatticeBasis<K>& basis) {
    check(basis.space.is_normalized(), "is_semi_reduced needs a normalized space");
    ensure_nonsingular(basis);
    const std::size_t n = basis.n();
    KMat<K> m(basis.field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        long mb = basis.lengths[i].ceil();
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = zc_shifted(basis.rows[i][j], mb);
    }
    return echelon_with_transform(m).rank == n;
}

template <class K>
bool is_orthonormal_basis(const ShiftedSpace& space, const RatFunMatrix<K>& rows, const K& field) {
    LatticeBasis<K> basis(field, space, rows);
    if (!is_reduced(basis)) return false;
    for (const auto& l : basis.lengths)
        if (!(l > ExtRational(-1) && l <= ExtRational(0))) return false;
    return true;
}

template <class K>
bool is_semi_orthonormal_basis(const ShiftedSpace& space, const RatFunMatrix<K>& rows, const K& field) {
    LatticeBasis<K> basis(field, space, rows);
    for (const auto& l : basis.lengths) {
        if (l.is_minus_infinity()) fail(errc::singular_basis, "zero row in basis");
        if (l.ceil() != 0) return false;
    }
    return is_semi_reduced(basis);
}

// Basis reduction for a single-class space E = K^n(r): iterate the echelon
// criterion on the full zc matrix until it reaches rank n.
template <class K>
ReduceResult<K> reduce_single_class(LatticeBasis<K> basis, const ReduceOptions& opts = {}) {
    check(basis.space.is_normalized(), "reduce_single_class needs a normalized space");
    for (const auto& s : basis.space.shifts)
        check(s == basis.space.shifts[0], "reduce_single_class needs a single signature class");

    auto det = det_of_rows(basis);
    if (det.is_zero()) fail(errc::singular_basis, "basis rows are K-linearly dependent");
    const long cap = detail::od_floor(basis, det.degree().ceil()) + 2;

    ReductionTrace trace;
    std::optional<PolyMatrix<K>> transition;
    if (opts.want_transition) transition = detail::poly_identity(basis.field, basis.n());

    SignatureClass cls(basis.space.shifts[0]);
    for (long pass = 0; ; ++pass) {
        check(pass <= cap, "reduction exceeded its step bound");
        auto zcm = build_zc_matrix(basis, cls);
        auto ech = echelon_with_transform(zcm.mat);
        ++trace.echelon_passes;
        if (ech.rank == basis.n()) break;
        apply_reduction_steps(basis, zcm, ech, trace,
                              transition ? &*transition : nullptr);
    }

    detail::sort_rows(basis, transition);
    check(is_reduced(basis), "reduce_single_class postcondition violated");
    return {std::move(basis), std::move(trace), std::move(transition)};
}

// General basis reduction: a FIFO worklist of signature classes, each pass
// applying all reduction steps the class admits. A class is re-queued when
// it is underpopulated or when a shortened row lands in it.
template <class K>
ReduceResult<K> reduce_general(LatticeBasis<K> basis, const ReduceOptions& opts = {}) {
    check(basis.space.is_normalized(), "reduce_general needs a normalized space");

    auto det = det_of_rows(basis);
    if (det.is_zero()) fail(errc::singular_basis, "basis rows are K-linearly dependent");

    const auto classes = shift_classes(basis.space);
    const std::size_t kappa = classes.size();
    const long smax =
        static_cast<long>(kappa) * detail::od_floor(basis, det.degree().ceil()) +
        static_cast<long>(kappa - 1) * static_cast<long>(basis.n());
    const long iteration_cap = (smax + 2) * (2 * static_cast<long>(kappa) + 2) + 8;

    auto multiplicity = [&](const SignatureClass& cls) -> std::size_t {
        for (const auto& sc : classes)
            if (sc.cls == cls) return sc.cols.size();
        check(false, "row length class outside the space signature");
        return 0;
    };

    ReductionTrace trace;
    std::optional<PolyMatrix<K>> transition;
    if (opts.want_transition) transition = detail::poly_identity(basis.field, basis.n());

    std::vector<SignatureClass> vals;
    vals.reserve(kappa);
    for (const auto& sc : classes) vals.push_back(sc.cls);

    auto pending_after = [&](std::size_t iota, const SignatureClass& cls) {
        for (std::size_t s = iota + 1; s < vals.size(); ++s)
            if (vals[s] == cls) return true;
        return false;
    };

    for (std::size_t iota = 0; iota < vals.size(); ++iota) {
        check(static_cast<long>(iota) <= iteration_cap, "reduction worklist exceeded its bound");
        const SignatureClass cls = vals[iota];
        const std::size_t m = multiplicity(cls);
        auto idx = rows_in_class(basis, cls);

        if (idx.empty()) {
            if (!pending_after(iota, cls)) vals.push_back(cls);
            continue;
        }
        auto zcm = build_zc_matrix(basis, cls);
        auto ech = echelon_with_transform(zcm.mat);
        ++trace.echelon_passes;
        if (ech.rank == idx.size()) {
            if (idx.size() < m && !pending_after(iota, cls)) vals.push_back(cls);
            continue;
        }
        std::size_t first_record = trace.records.size();
        apply_reduction_steps(basis, zcm, ech, trace,
                              transition ? &*transition : nullptr);
        for (std::size_t r = first_record; r < trace.records.size(); ++r) {
            auto newcls = signature_class(trace.records[r].new_length);
            if (!pending_after(iota, newcls)) vals.push_back(newcls);
        }
    }

    detail::sort_rows(basis, transition);
    check(is_reduced(basis), "reduce_general postcondition violated");
    return {std::move(basis), std::move(trace), std::move(transition)};
}

template <class K>
struct PipelineResult {
    LatticeBasis<K> basis;
    ReductionTrace semi;   // phase 1, the ceiling-norm reduction
    ReductionTrace full;   // phase 2
    std::optional<PolyMatrix<K>> transition;
};

// Algorithm pipeline: first reduce with respect to the ceiling norm (a
// single-class problem over K^n), then finish with the general reduction.
template <class K>
PipelineResult<K> reduce_pipeline(const LatticeBasis<K>& basis, const ReduceOptions& opts = {}) {
    check(basis.space.is_normalized(), "reduce_pipeline needs a normalized space");
    const std::size_t n = basis.n();

    ShiftedSpace ceil_space(std::vector<mpq_class>(n, mpq_class(0)));
    LatticeBasis<K> ceil_basis(basis.field, ceil_space, basis.rows);
    auto semi = reduce_single_class(std::move(ceil_basis), opts);

    LatticeBasis<K> mid(basis.field, basis.space, semi.basis.rows);
    auto full = reduce_general(std::move(mid), opts);

    std::optional<PolyMatrix<K>> transition;
    if (opts.want_transition)
        transition = detail::poly_matrix_mul(*full.transition, *semi.transition, basis.field);
    return {std::move(full.basis), std::move(semi.trace), std::move(full.trace),
            std::move(transition)};
}

}  // namespace funlat

#endif
