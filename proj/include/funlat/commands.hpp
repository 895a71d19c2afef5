#ifndef FUNLAT_COMMANDS_HPP
#define FUNLAT_COMMANDS_HPP

#include <optional>
#include <string>

#include "analysis.hpp"
#include "io.hpp"

namespace funlat {

struct CommandOptions {
    bool trace = false;
    bool transition = false;
    bool pipeline = false;
    std::optional<long> r;      // dim: the radius of L_{<=r}
    std::optional<long> bound;  // oracle: enumeration degree bound
};

struct CommandOutcome {
    nlohmann::json report;
    int exit_code = 0;
};

namespace detail {

using nlohmann::json;

inline json length_json(const ExtRational& l) { return l.str(); }

inline json lengths_json(const std::vector<ExtRational>& ls) {
    json out = json::array();
    for (const auto& l : ls) out.push_back(length_json(l));
    return out;
}

inline json trace_json(const ReductionTrace& t) {
    json recs = json::array();
    for (const auto& r : t.records) {
        recs.push_back(json{{"row", r.row},
                            {"class", r.pivot_class.str()},
                            {"old_length", r.old_length.str()},
                            {"new_length", r.new_length.str()}});
    }
    return recs;
}

template <class K>
json transition_json(const PolyMatrix<K>& R) {
    json out = json::array();
    for (const auto& row : R) {
        json jrow = json::array();
        for (const auto& p : row) jrow.push_back(ratfun_to_json(RatFun<K>(p)));
        out.push_back(std::move(jrow));
    }
    return out;
}

template <class K>
void verify_transition(const PolyMatrix<K>& R, const RatFunMatrix<K>& input,
                       const RatFunMatrix<K>& output, const K& field) {
    auto d = det_poly_matrix(R, field);
    check(!d.is_zero() && d.deg() == 0, "transition determinant is not a unit");
    RatFunMatrix<K> rr;
    for (const auto& row : R) {
        rr.emplace_back();
        for (const auto& p : row) rr.back().emplace_back(p);
    }
    auto prod = ratfun_matrix_mul(rr, input, field);
    check(prod == output, "transition matrix does not map input to output");
}

template <class K>
json run_reduce_like(const FieldDesc& desc, const Instance<K>& inst, const CommandOptions& opts,
                     bool emit_lattice_block) {
    auto prep = prepare_lattice(inst.field, inst.space, inst.rows);
    const RatFunMatrix<K> input_rows = prep.basis.rows;
    auto inv0 = invariant_report(prep.basis);
    long h_before = height_matrix(prep.basis.rows);

    ReduceOptions ropts{opts.transition};
    json rep;
    ReductionTrace trace;
    std::optional<PolyMatrix<K>> transition;
    LatticeBasis<K> out(inst.field, prep.basis.space, prep.basis.rows);
    if (opts.pipeline) {
        auto pr = reduce_pipeline(prep.basis, ropts);
        out = std::move(pr.basis);
        trace = pr.full;
        trace.steps += pr.semi.steps;
        trace.echelon_passes += pr.semi.echelon_passes;
        trace.records.insert(trace.records.begin(), pr.semi.records.begin(),
                             pr.semi.records.end());
        rep["semi_steps"] = pr.semi.steps;
        rep["full_steps"] = pr.full.steps;
        transition = std::move(pr.transition);
    } else {
        auto rr = reduce_general(std::move(prep.basis), ropts);
        out = std::move(rr.basis);
        trace = std::move(rr.trace);
        transition = std::move(rr.transition);
    }

    check(is_reduced(out), "output failed the reduceness re-check");
    if (transition) verify_transition(*transition, input_rows, out.rows, inst.field);

    auto inv1 = invariant_report(out);
    rep["od_before"] = fraction_str(inv0.od);
    rep["od_after"] = fraction_str(inv1.od);
    rep["steps"] = trace.steps;
    rep["echelon_passes"] = trace.echelon_passes;
    rep["height_before"] = h_before;
    rep["height_after"] = height_matrix(out.rows);
    rep["lengths"] = lengths_json(out.lengths);
    json sm = json::array(), classes = json::array();
    for (const auto& l : out.lengths) {
        sm.push_back(l.str());
        classes.push_back(signature_class(l).str());
    }
    rep["sm"] = std::move(sm);
    rep["sm_classes"] = std::move(classes);
    if (emit_lattice_block) {
        FieldDesc d = desc;
        rep["lattice"] = instance_to_json(d, prep.original_space, unprepare_rows(prep, out.rows));
    }
    if (opts.trace) rep["trace"] = trace_json(trace);
    if (transition) rep["transition"] = transition_json(*transition);
    return rep;
}

template <class K>
json run_check(const Instance<K>& inst) {
    auto prep = prepare_lattice(inst.field, inst.space, inst.rows);
    bool red = is_reduced(prep.basis);
    auto inv = invariant_report(prep.basis);
    json rep;
    rep["reduced"] = red;
    rep["od"] = fraction_str(inv.od);
    rep["lengths"] = lengths_json(prep.basis.lengths);
    return rep;
}

template <class K>
json run_dim(const Instance<K>& inst, long r) {
    auto prep = prepare_lattice(inst.field, inst.space, inst.rows);
    long dim = dim_leq(prep.basis, mpq_class(r));
    auto vectors = sublattice_basis_leq(prep.basis, mpq_class(r));
    check(static_cast<long>(vectors.size()) == dim, "dim formula disagrees with the vector list");

    json table = json::array();
    for (std::size_t i = 0; i < prep.basis.n(); ++i) {
        auto gap = ExtRational(mpq_class(r)) - prep.basis.lengths[i];
        if (gap < ExtRational(0)) continue;
        table.push_back(json{{"row", i},
                             {"length", prep.basis.lengths[i].str()},
                             {"max_power", gap.floor()}});
    }
    json rep;
    rep["r"] = r;
    rep["dim"] = dim;
    rep["table"] = std::move(table);
    return rep;
}

template <class K>
json run_oracle(const Instance<K>& inst, long bound) {
    auto prep = prepare_lattice(inst.field, inst.space, inst.rows);
    auto sm = oracle_successive_minima(prep.basis, bound);
    json out = json::array();
    for (const auto& q : sm) out.push_back(fraction_str(q));
    json rep;
    rep["bound"] = bound;
    rep["sm"] = std::move(out);
    return rep;
}

}  // namespace detail

inline CommandOutcome run_command(const std::string& name, const std::string& input_bytes,
                                  const CommandOptions& opts) {
    LatticeDoc doc = parse_lattice(input_bytes);

    nlohmann::json rep = std::visit(
        [&](const auto& inst) -> nlohmann::json {
            if (name == "reduce") return detail::run_reduce_like(doc.desc, inst, opts, true);
            if (name == "minima") return detail::run_reduce_like(doc.desc, inst, opts, true);
            if (name == "check") return detail::run_check(inst);
            if (name == "dim") {
                check(opts.r.has_value(), "dim requires --r");
                return detail::run_dim(inst, *opts.r);
            }
            if (name == "oracle") {
                check(opts.bound.has_value(), "oracle requires --bound");
                return detail::run_oracle(inst, *opts.bound);
            }
            fail(errc::schema_error, "unknown command \"" + name + "\"");
        },
        doc.inst);

    rep["command"] = name;
    rep["digest"] = input_digest(input_bytes);
    rep["engine"] = nlohmann::json{{"name", kEngineName}, {"version", kEngineVersion}};
    rep["field"] = field_to_json(doc.desc);
    std::visit([&](const auto& inst) {
        rep["n"] = inst.space.dim();
        nlohmann::json shifts = nlohmann::json::array();
        for (const auto& s : inst.space.shifts) shifts.push_back(fraction_str(s));
        rep["shifts"] = std::move(shifts);
    }, doc.inst);
    return {std::move(rep), 0};
}

}  // namespace funlat

#endif
