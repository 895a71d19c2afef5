#ifndef FUNLAT_ERRORS_HPP
#define FUNLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace funlat {

enum class errc {
    division_by_zero,
    positive_degree,
    zero_input,
    zero_row,
    minus_infinity,
    dimension_mismatch,
    singular_basis,
    empty_class,
    no_zero_rows,
    not_reduced,
    field_not_finite,
    bound_too_small,
    enumeration_too_large,
    schema_error,
    non_rational_shift,
    prime_required,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::positive_degree: return "PositiveDegree";
    case errc::zero_input: return "ZeroInput";
    case errc::zero_row: return "ZeroRow";
    case errc::minus_infinity: return "MinusInfinity";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::singular_basis: return "SingularBasis";
    case errc::empty_class: return "EmptyClass";
    case errc::no_zero_rows: return "NoZeroRows";
    case errc::not_reduced: return "NotReduced";
    case errc::field_not_finite: return "FieldNotFinite";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::schema_error: return "SchemaError";
    case errc::non_rational_shift: return "NonRationalShift";
    case errc::prime_required: return "PrimeRequired";
    case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

// Internal contract checks. These stay on in release builds: every violation
// is a library bug, never a data error.
inline void check(bool cond, const char* what) {
    if (!cond) throw error(errc::internal_error, what);
}

}  // namespace funlat

#endif
