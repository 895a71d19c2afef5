#ifndef FUNLAT_POLY_HPP
#define FUNLAT_POLY_HPP

#include <utility>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"

namespace funlat {

// Dense univariate polynomial over a coefficient field K. Coefficients are
// stored ascending with no trailing zeros; the zero polynomial is the empty
// list.
template <class K>
class Poly {
public:
    using Elem = typename K::Elem;

    explicit Poly(K field) : field_(std::move(field)) {}
    Poly(K field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly constant(K field, Elem v) {
        std::vector<Elem> c;
        if (!field.is_zero(v)) c.push_back(std::move(v));
        return Poly(std::move(field), std::move(c));
    }
    static Poly t_power(K field, unsigned e) {
        std::vector<Elem> c(e + 1, field.zero());
        c.back() = field.one();
        return Poly(std::move(field), std::move(c));
    }

    const K& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    // Degree of a nonzero polynomial; deg(0) is -infinity and has no int value.
    int deg() const {
        check(!c_.empty(), "deg() of zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }
    const Elem& lc() const {
        check(!c_.empty(), "lc() of zero polynomial");
        return c_.back();
    }
    Elem coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : field_.zero();
    }
    bool is_one() const { return c_.size() == 1 && field_.is_one(c_[0]); }
    bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }

    Poly operator+(const Poly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = field_.add(coeff(i), o.coeff(i));
        return Poly(field_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = field_.sub(coeff(i), o.coeff(i));
        return Poly(field_, std::move(r));
    }
    Poly operator-() const {
        std::vector<Elem> r(c_);
        for (auto& x : r) x = field_.neg(x);
        return Poly(field_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(field_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
        }
        return Poly(field_, std::move(r));
    }

    Poly scaled(const Elem& s) const {
        if (field_.is_zero(s)) return Poly(field_);
        std::vector<Elem> r(c_);
        for (auto& x : r) x = field_.mul(x, s);
        return Poly(field_, std::move(r));
    }
    // Multiplication by t^e.
    Poly shifted(unsigned e) const {
        if (is_zero() || e == 0) return *this;
        std::vector<Elem> r(c_.size() + e, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
        return Poly(field_, std::move(r));
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!field_.equal(c_[i], o.c_[i])) return false;
        return true;
    }

    Elem eval(const Elem& x) const {
        Elem acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    // Monic associate: divide by the leading coefficient.
    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        return scaled(field_.inv(lc()));
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    K field_;
    std::vector<Elem> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    const K& k = a.field();
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (a.is_zero() || a.deg() < b.deg()) return {Poly<K>(k), a};

    std::vector<typename K::Elem> rem(a.coeffs());
    std::vector<typename K::Elem> quot(a.deg() - b.deg() + 1, k.zero());
    auto lc_inv = k.inv(b.lc());
    for (int i = a.deg() - b.deg(); i >= 0; --i) {
        auto c = k.mul(rem[i + b.deg()], lc_inv);
        if (k.is_zero(c)) continue;
        quot[i] = c;
        for (int j = 0; j <= b.deg(); ++j)
            rem[i + j] = k.sub(rem[i + j], k.mul(c, b.coeff(j)));
    }
    return {Poly<K>(k, std::move(quot)), Poly<K>(k, std::move(rem))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

// Monic gcd.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

}  // namespace funlat

#endif
