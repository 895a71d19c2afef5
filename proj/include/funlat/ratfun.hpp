#ifndef FUNLAT_RATFUN_HPP
#define FUNLAT_RATFUN_HPP

#include <utility>
#include <vector>

#include "extrational.hpp"
#include "poly.hpp"

namespace funlat {

// Element of K = k(t), kept canonical: gcd(num, den) = 1 and den monic.
// Its degree deg(num) - deg(den) is the valuation-theoretic length |x|,
// with |0| = -infinity.
template <class K>
class RatFun {
public:
    using Elem = typename K::Elem;

    explicit RatFun(K field)
        : num_(Poly<K>(field)), den_(Poly<K>::constant(field, field.one())) {}
    explicit RatFun(Poly<K> num)
        : num_(std::move(num)), den_(Poly<K>::constant(num_.field(), num_.field().one())) {}
    RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
        canonicalize();
    }

    static RatFun zero(K field) { return RatFun(std::move(field)); }
    static RatFun one(K field) {
        return RatFun(Poly<K>::constant(std::move(field), field.one()));
    }
    static RatFun t_power(K field, long e) {
        if (e >= 0) return RatFun(Poly<K>::t_power(std::move(field), static_cast<unsigned>(e)));
        return RatFun(Poly<K>::constant(field, field.one()),
                      Poly<K>::t_power(field, static_cast<unsigned>(-e)));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    const K& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }

    ExtRational degree() const {
        if (is_zero()) return ExtRational::minus_infinity();
        return ExtRational(static_cast<long>(num_.deg()) - den_.deg());
    }

    RatFun operator+(const RatFun& o) const {
        return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFun operator-(const RatFun& o) const {
        return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFun operator-() const { return RatFun(-num_, den_); }
    RatFun operator*(const RatFun& o) const {
        return RatFun(num_ * o.num_, den_ * o.den_);
    }
    RatFun inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero rational function");
        return RatFun(den_, num_);
    }
    RatFun operator/(const RatFun& o) const { return *this * o.inverse(); }

    RatFun scaled(const Elem& s) const { return RatFun(num_.scaled(s), den_); }
    RatFun mul_t_power(long e) const {
        if (e >= 0) return RatFun(num_.shifted(static_cast<unsigned>(e)), den_);
        return RatFun(num_, den_.shifted(static_cast<unsigned>(-e)));
    }

    bool is_polynomial() const { return den_.is_one(); }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(field(), field().one());
            return;
        }
        auto g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (!den_.is_monic()) {
            auto s = field().inv(den_.lc());
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }

    Poly<K> num_, den_;
};

// Zero coefficient of x in A_infty: the constant term of the t^{-1}
// expansion, characterized by |x - zc(x)| < 0. Requires |x| <= 0.
template <class K>
typename K::Elem zc(const RatFun<K>& x) {
    if (x.is_zero()) return x.field().zero();
    long d = static_cast<long>(x.num().deg()) - x.den().deg();
    if (d > 0) fail(errc::positive_degree, "zc of element with positive degree");
    if (d < 0) return x.field().zero();
    return x.field().div(x.num().lc(), x.den().lc());
}

// zc(t^{-m} x) without materializing the product. Requires |x| <= m.
template <class K>
typename K::Elem zc_shifted(const RatFun<K>& x, long m) {
    if (x.is_zero()) return x.field().zero();
    long d = static_cast<long>(x.num().deg()) - x.den().deg();
    if (d > m) fail(errc::positive_degree, "zc_shifted of element with positive shifted degree");
    if (d < m) return x.field().zero();
    return x.field().div(x.num().lc(), x.den().lc());
}

// Height h(g) = max{deg num, deg den} of a nonzero canonical fraction.
template <class K>
long height(const RatFun<K>& g) {
    if (g.is_zero()) fail(errc::zero_input, "height of zero");
    return std::max<long>(g.num().deg(), g.den().deg());
}

// Height of a matrix: max entry height, zero entries counting as height 0.
template <class K>
long height_matrix(const std::vector<std::vector<RatFun<K>>>& m) {
    check(!m.empty(), "height of empty matrix");
    long h = 0;
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) h = std::max(h, height(x));
    return h;
}

}  // namespace funlat

#endif
