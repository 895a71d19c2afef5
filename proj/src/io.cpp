#include "funlat/io.hpp"

#include <cctype>

namespace funlat {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

mpq_class parse_fraction(const std::string& s, errc on_error) {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    std::size_t slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(s, start, s.size());
    } else {
        ok = all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
    }
    if (!ok) fail(on_error, "not a canonical fraction: \"" + s + "\"");
    mpq_class q;
    if (q.set_str(slash == std::string::npos ? s + "/1" : s, 10) != 0 || q.get_den() == 0)
        fail(on_error, "invalid fraction: \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string fraction_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string input_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using nlohmann::json;

mpq_class shift_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) return parse_fraction(j.get<std::string>(), errc::non_rational_shift);
    if (j.is_number_float())
        fail(errc::non_rational_shift, "shifts must be exact fractions, not decimals");
    fail(errc::schema_error, "shift must be an integer or a \"p/q\" string");
}

mpq_class q_coeff_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) return parse_fraction(j.get<std::string>(), errc::schema_error);
    fail(errc::schema_error, "coefficients must be integers or \"p/q\" strings");
}

std::uint64_t gf_coeff_from_json(const GF& f, const json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<long>());
    if (j.is_string()) {
        mpq_class q = parse_fraction(j.get<std::string>(), errc::schema_error);
        mpz_class p(static_cast<unsigned long>(f.modulus()));
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        if (num < 0) num += p;
        if (den < 0) den += p;
        return f.div(f.from_int(num.get_si()), f.from_int(den.get_si()));
    }
    fail(errc::schema_error, "coefficients must be integers or \"p/q\" strings");
}

template <class K, class CoeffFn>
Instance<K> instance_from_json(K field, const json& doc, CoeffFn coeff) {
    if (!doc.contains("shifts") || !doc["shifts"].is_array() || doc["shifts"].empty())
        fail(errc::schema_error, "\"shifts\" must be a nonempty array");
    std::vector<mpq_class> shifts;
    for (const auto& s : doc["shifts"]) shifts.push_back(shift_from_json(s));

    if (!doc.contains("rows") || !doc["rows"].is_array())
        fail(errc::schema_error, "\"rows\" must be an array of rows");

    auto poly_from = [&](const json& arr) {
        if (!arr.is_array()) fail(errc::schema_error, "coefficient list must be an array");
        std::vector<typename K::Elem> c;
        for (const auto& e : arr) c.push_back(coeff(e));
        return Poly<K>(field, std::move(c));
    };

    RatFunMatrix<K> rows;
    for (const auto& jrow : doc["rows"]) {
        if (!jrow.is_array()) fail(errc::schema_error, "row must be an array of entries");
        std::vector<RatFun<K>> row;
        for (const auto& e : jrow) {
            if (!e.is_object() || !e.contains("num"))
                fail(errc::schema_error, "matrix entry must be an object with \"num\"");
            Poly<K> num = poly_from(e["num"]);
            Poly<K> den = e.contains("den") ? poly_from(e["den"])
                                            : Poly<K>::constant(field, field.one());
            row.emplace_back(std::move(num), std::move(den));
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != shifts.size())
        fail(errc::dimension_mismatch, "row count must equal the number of shifts");
    for (const auto& row : rows)
        if (row.size() != shifts.size())
            fail(errc::dimension_mismatch, "row width must equal the number of shifts");
    return Instance<K>{std::move(field), ShiftedSpace(std::move(shifts)), std::move(rows)};
}

}  // namespace

LatticeDoc parse_lattice(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        fail(errc::schema_error, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(errc::schema_error, "top-level value must be an object");
    if (!doc.contains("field") || !doc["field"].is_object() || !doc["field"].contains("type"))
        fail(errc::schema_error, "\"field\" must be {\"type\":\"Q\"} or {\"type\":\"GF\",\"p\":...}");

    const auto& jf = doc["field"];
    std::string type = jf["type"].is_string() ? jf["type"].get<std::string>() : "";
    nlohmann::json metadata;
    if (doc.contains("metadata")) metadata = doc["metadata"];
    if (type == "Q") {
        QQ field;
        return LatticeDoc{FieldDesc{true, 0},
                          instance_from_json(field, doc, q_coeff_from_json), std::move(metadata)};
    }
    if (type == "GF") {
        if (!jf.contains("p") || !jf["p"].is_number_integer() || jf["p"].get<long long>() < 2)
            fail(errc::schema_error, "GF field needs an integer modulus \"p\" >= 2");
        std::uint64_t p = jf["p"].get<std::uint64_t>();
        GF field(p);  // PrimeRequired for composite p
        return LatticeDoc{FieldDesc{false, p},
                          instance_from_json(field, doc,
                                             [&field](const json& j) {
                                                 return gf_coeff_from_json(field, j);
                                             }),
                          std::move(metadata)};
    }
    fail(errc::schema_error, "unknown field type \"" + type + "\"");
}

nlohmann::json field_to_json(const FieldDesc& desc) {
    if (desc.is_q) return json{{"type", "Q"}};
    return json{{"type", "GF"}, {"p", desc.p}};
}

nlohmann::json lattice_to_json(const LatticeDoc& doc) {
    json out = std::visit(
        [&](const auto& inst) { return instance_to_json(doc.desc, inst.space, inst.rows); },
        doc.inst);
    if (!doc.metadata.is_null()) out["metadata"] = doc.metadata;
    return out;
}

std::string emit_lattice(const LatticeDoc& doc) { return lattice_to_json(doc).dump(); }

}  // namespace funlat
