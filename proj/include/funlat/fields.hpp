#ifndef FUNLAT_FIELDS_HPP
#define FUNLAT_FIELDS_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace funlat {

// Coefficient fields are small "domain" objects: an element type plus the
// arithmetic on it. Generic code is templated over the domain and carries an
// instance around, so GF(p) elements do not need to store their modulus.

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

// The rational field. Elements are GMP rationals kept in canonical form
// (reduced, positive denominator), so equality is plain comparison.
class QQ {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    Elem neg(const Elem& a) const { return Elem(-a); }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) fail(errc::division_by_zero, "inverse of 0 in Q");
        return Elem(1 / a);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const {
        if (a.get_den() == 1) return a.get_num().get_str();
        return a.get_num().get_str() + "/" + a.get_den().get_str();
    }

    bool same_field(const QQ&) const { return true; }
    std::string name() const { return "Q"; }
};

// A prime field GF(p). Elements are canonical residues 0..p-1.
class GF {
public:
    using Elem = std::uint64_t;

    explicit GF(std::uint64_t p) : p_(p) {
        if (!detail::is_prime_u64(p))
            fail(errc::prime_required, "GF modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long v) const {
        long long r = static_cast<long long>(v) % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
    Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) fail(errc::division_by_zero, "inverse of 0 in GF(p)");
        return detail::powmod_u64(a, p_ - 2, p_);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool equal(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    bool same_field(const GF& other) const { return p_ == other.p_; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

private:
    std::uint64_t p_;
};

}  // namespace funlat

#endif
