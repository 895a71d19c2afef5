#ifndef FUNLAT_EXTRATIONAL_HPP
#define FUNLAT_EXTRATIONAL_HPP

#include <compare>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace funlat {

// An exact rational extended by -infinity. Norm values, degrees and shifts
// live here; -infinity is a first-class value, never a sentinel integer.
class ExtRational {
public:
    ExtRational() : finite_(true), q_(0) {}
    ExtRational(mpq_class q) : finite_(true), q_(std::move(q)) { q_.canonicalize(); }
    ExtRational(long v) : finite_(true), q_(v) {}

    static ExtRational minus_infinity() {
        ExtRational r;
        r.finite_ = false;
        return r;
    }

    bool is_minus_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const mpq_class& value() const {
        if (!finite_) fail(errc::minus_infinity, "value() on -infinity");
        return q_;
    }

    // -infinity absorbs addition.
    ExtRational operator+(const ExtRational& o) const {
        if (!finite_ || !o.finite_) return minus_infinity();
        return ExtRational(q_ + o.q_);
    }
    ExtRational operator+(long v) const {
        if (!finite_) return minus_infinity();
        return ExtRational(q_ + v);
    }
    ExtRational operator-(const ExtRational& o) const {
        if (!finite_) return minus_infinity();
        check(o.finite_, "subtracting -infinity");
        return ExtRational(q_ - o.q_);
    }

    bool operator==(const ExtRational& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || q_ == o.q_;
    }
    std::strong_ordering operator<=>(const ExtRational& o) const {
        if (!finite_ && !o.finite_) return std::strong_ordering::equal;
        if (!finite_) return std::strong_ordering::less;
        if (!o.finite_) return std::strong_ordering::greater;
        int c = cmp(q_, o.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Smallest integer >= value. Requires a finite value.
    long ceil() const {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), value().get_num().get_mpz_t(), value().get_den().get_mpz_t());
        check(c.fits_slong_p(), "ceil out of long range");
        return c.get_si();
    }
    long floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), value().get_num().get_mpz_t(), value().get_den().get_mpz_t());
        check(f.fits_slong_p(), "floor out of long range");
        return f.get_si();
    }

    bool is_integer() const { return finite_ && q_.get_den() == 1; }

    std::string str() const {
        if (!finite_) return "-inf";
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    bool finite_;
    mpq_class q_;
};

inline ExtRational ceil_of(const ExtRational& r) {
    if (r.is_minus_infinity()) return ExtRational::minus_infinity();
    return ExtRational(r.ceil());
}

}  // namespace funlat

#endif
