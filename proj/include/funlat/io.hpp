#ifndef FUNLAT_IO_HPP
#define FUNLAT_IO_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "lattice.hpp"

namespace funlat {

inline constexpr const char* kEngineName = "funlat";
inline constexpr const char* kEngineVersion = "0.1.0";

struct FieldDesc {
    bool is_q = true;
    std::uint64_t p = 0;
};

template <class K>
struct Instance {
    K field;
    ShiftedSpace space;
    RatFunMatrix<K> rows;
};

struct LatticeDoc {
    FieldDesc desc;
    std::variant<Instance<QQ>, Instance<GF>> inst;
    nlohmann::json metadata;  // optional free-form block, preserved on emit
};

// Strict "p/q" fractions: optional sign, digits, optional /digits. Decimals
// and anything else are rejected so no float ever enters the engine.
mpq_class parse_fraction(const std::string& s, errc on_error);
std::string fraction_str(const mpq_class& q);

// Parse a lattice file (UTF-8 JSON). Throws SchemaError, NonRationalShift,
// PrimeRequired, DimensionMismatch.
LatticeDoc parse_lattice(const std::string& bytes);

nlohmann::json field_to_json(const FieldDesc& desc);
nlohmann::json lattice_to_json(const LatticeDoc& doc);
std::string emit_lattice(const LatticeDoc& doc);

template <class K>
nlohmann::json ratfun_to_json(const RatFun<K>& x);
template <class K>
nlohmann::json rows_to_json(const RatFunMatrix<K>& rows);
template <class K>
nlohmann::json instance_to_json(const FieldDesc& desc, const ShiftedSpace& space,
                                const RatFunMatrix<K>& rows);

// FNV-1a 64-bit content digest used to tag reports.
std::string input_digest(const std::string& bytes);

// --- template definitions -------------------------------------------------

namespace detail {
inline nlohmann::json coeff_json(const QQ& f, const mpq_class& c) {
    return f.to_string(c);
}
inline nlohmann::json coeff_json(const GF&, std::uint64_t c) { return c; }
}  // namespace detail

template <class K>
nlohmann::json ratfun_to_json(const RatFun<K>& x) {
    const K& f = x.field();
    nlohmann::json num = nlohmann::json::array();
    for (const auto& c : x.num().coeffs()) num.push_back(detail::coeff_json(f, c));
    nlohmann::json den = nlohmann::json::array();
    for (const auto& c : x.den().coeffs()) den.push_back(detail::coeff_json(f, c));
    return nlohmann::json{{"num", std::move(num)}, {"den", std::move(den)}};
}

template <class K>
nlohmann::json rows_to_json(const RatFunMatrix<K>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& x : row) jrow.push_back(ratfun_to_json(x));
        out.push_back(std::move(jrow));
    }
    return out;
}

template <class K>
nlohmann::json instance_to_json(const FieldDesc& desc, const ShiftedSpace& space,
                                const RatFunMatrix<K>& rows) {
    nlohmann::json shifts = nlohmann::json::array();
    for (const auto& s : space.shifts) shifts.push_back(fraction_str(s));
    return nlohmann::json{
        {"field", field_to_json(desc)}, {"shifts", std::move(shifts)}, {"rows", rows_to_json(rows)}};
}

}  // namespace funlat

#endif
