#include <doctest.h>

#include "testutil.hpp"

using namespace funlat;
using testutil::poly;
using testutil::q;
using testutil::rf;

TEST_CASE("field scalars are canonical") {
    QQ f;
    CHECK(f.equal(f.div(f.from_int(2), f.from_int(4)), q("1/2")));
    CHECK(f.to_string(q("-3/6")) == "-1/2");

    GF g5(5);
    CHECK(g5.from_int(-1) == 4);
    CHECK(g5.from_int(12) == 2);
    CHECK(g5.mul(3, 4) == 2);
    CHECK(g5.inv(2) == 3);
    CHECK_THROWS_AS(g5.inv(0), error);
}

TEST_CASE("GF modulus must be prime") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 97ull}) CHECK_NOTHROW(GF{p});
    for (std::uint64_t p : {0ull, 1ull, 4ull, 9ull, 91ull}) {
        CHECK_THROWS_AS(GF{p}, error);
    }
}

TEST_CASE("polynomial arithmetic") {
    QQ f;
    auto a = poly(f, {0, 0, 0, 1});  // t^3
    auto b = poly(f, {-1, 1});       // t - 1
    auto [quot, rem] = divmod(a, b);
    CHECK(quot == poly(f, {1, 1, 1}));
    CHECK(rem == poly(f, {1}));

    CHECK(gcd(poly(f, {-1, 0, 1}), poly(f, {-1, 1})) == poly(f, {-1, 1}));

    GF g3(3);
    auto s = poly(g3, {2, 1});  // t + 2
    CHECK(s * s == poly(g3, {1, 1, 1}));

    CHECK(f.equal(poly(f, {1, 2}).eval(q("3")), q("7")));
    CHECK_THROWS_AS(divmod(a, Poly<QQ>(f)), error);
}

TEST_CASE("rational function degree") {
    QQ f;
    CHECK(rf(f, {1, 2}).degree() == ExtRational(1));
    CHECK(RatFun<QQ>::zero(f).degree().is_minus_infinity());
    CHECK(rf(f, {1, 0, 1}, {0, 0, 0, 1}).degree() == ExtRational(-1));
}

TEST_CASE("zero coefficient") {
    QQ f;
    CHECK(f.equal(zc(rf(f, {1, 2}, {0, 1})), q("2")));  // (2t+1)/t
    CHECK(f.equal(zc(rf(f, {1}, {0, 1})), q("0")));     // 1/t
    CHECK(f.equal(zc(rf(f, {5})), q("5")));             // constant
    CHECK_THROWS_AS(zc(rf(f, {0, 1})), error);          // |t| = 1 > 0

    CHECK(f.equal(zc_shifted(rf(f, {2, 0, 0, 0, 0, 0, 0, 1}), 7), q("1")));
    CHECK(f.equal(zc_shifted(rf(f, {0, 0, 0, 0, 0, 0, 2}), 7), q("0")));
}

TEST_CASE("heights") {
    QQ f;
    CHECK(height(rf(f, {2, 0, 0, 0, 0, 0, 0, 1})) == 7);
    CHECK(height(rf(f, {1}, {0, 0, 0, 1})) == 3);
    CHECK(height(rf(f, {1, 0, 1}, {0, 1, 0, 0, 0, 1})) == 5);
    CHECK_THROWS_AS(height(RatFun<QQ>::zero(f)), error);

    RatFunMatrix<QQ> id{{rf(f, {1}), rf(f, {})}, {rf(f, {}), rf(f, {1})}};
    CHECK(height_matrix(id) == 0);
    CHECK(height_matrix(testutil::example_q2().rows) == 7);
    RatFunMatrix<QQ> r{{rf(f, {1}), rf(f, {})},
                       {rf(f, {0, 0, 0, 0, 0, 0, -1}, {2}), rf(f, {1})}};
    CHECK(height_matrix(r) == 6);
}

TEST_CASE("extended rationals") {
    auto inf = ExtRational::minus_infinity();
    CHECK(inf < ExtRational(q("-1000000")));
    CHECK((inf + ExtRational(5)).is_minus_infinity());
    CHECK(ExtRational(q("14/3")).ceil() == 5);
    CHECK(ExtRational(q("14/3")).floor() == 4);
    CHECK(ExtRational(q("-1/4")).ceil() == 0);
    CHECK_THROWS_AS(inf.value(), error);
}

TEST_CASE("canonicalization is idempotent") {
    QQ f;
    testutil::InstanceGen<QQ> gen(f, 7);
    for (int i = 0; i < 50; ++i) {
        auto num = gen.random_poly(4, false);
        auto den = gen.random_poly(4, true);
        RatFun<QQ> x(num, den);
        RatFun<QQ> again(x.num(), x.den());
        CHECK(x == again);
        CHECK(x.den().is_monic());
        if (!x.is_zero()) CHECK(gcd(x.num(), x.den()).is_one());
    }
}

template <class K>
static void degree_properties(K field, std::uint64_t seed) {
    testutil::InstanceGen<K> gen(field, seed);
    for (int i = 0; i < 80; ++i) {
        RatFun<K> x(gen.random_poly(3, false), gen.random_poly(3, true));
        RatFun<K> y(gen.random_poly(3, false), gen.random_poly(3, true));
        CHECK((x * y).degree() == x.degree() + y.degree());
        auto ds = (x + y).degree();
        auto mx = std::max(x.degree(), y.degree());
        CHECK(ds <= mx);
        if (x.degree() != y.degree()) CHECK(ds == mx);
    }
}

TEST_CASE("degree is a valuation") {
    degree_properties(QQ{}, 11);
    degree_properties(GF{5}, 12);
}

TEST_CASE("zc is multiplicative on A_infty") {
    GF f(7);
    testutil::InstanceGen<GF> gen(f, 13);
    for (int i = 0; i < 60; ++i) {
        auto den1 = Poly<GF>::t_power(f, 2) + gen.random_poly(1, false);
        auto den2 = Poly<GF>::t_power(f, 2) + gen.random_poly(1, false);
        RatFun<GF> x(gen.random_poly(2, false), den1);
        RatFun<GF> y(gen.random_poly(2, false), den2);
        CHECK(f.equal(zc(x * y), f.mul(zc(x), zc(y))));
    }
}

// The product bound h(TT') <= h(T) + h(T') concerns polynomial matrices (the
// reduction algorithms clear denominators first); for matrices with unrelated
// denominators an n-fold entry sum can exceed it.
template <class K>
static void height_properties(K field, std::uint64_t seed) {
    testutil::InstanceGen<K> gen(field, seed);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 2 + iter % 2;
        auto mk_poly = [&] {
            RatFunMatrix<K> m(n, std::vector<RatFun<K>>(n, RatFun<K>::zero(field)));
            for (auto& row : m)
                for (auto& x : row) x = RatFun<K>(gen.random_poly(3, false));
            return m;
        };
        auto a = mk_poly(), b = mk_poly();
        auto ab = ratfun_matrix_mul(a, b, field);
        bool zero = true;
        for (const auto& row : ab)
            for (const auto& x : row) zero = zero && x.is_zero();
        if (!zero) CHECK(height_matrix(ab) <= height_matrix(a) + height_matrix(b));

        // |det T| <= n h(T) holds for arbitrary rational entries
        RatFunMatrix<K> r(n, std::vector<RatFun<K>>(n, RatFun<K>::zero(field)));
        for (auto& row : r)
            for (auto& x : row)
                x = RatFun<K>(gen.random_poly(2, false), gen.random_poly(1, true));
        auto d = det_ratfun_matrix(r, field);
        if (!d.is_zero())
            CHECK(d.degree() <= ExtRational(static_cast<long>(n) * height_matrix(r)));
    }
}

TEST_CASE("height bounds products and determinants") {
    height_properties(QQ{}, 21);
    height_properties(GF{3}, 22);
}
