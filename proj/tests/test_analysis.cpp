#include <doctest.h>

#include "testutil.hpp"

using namespace funlat;
using testutil::example_f3;
using testutil::example_q2;
using testutil::q;
using testutil::rf;

TEST_CASE("volumes") {
    CHECK(volume_basis(example_q2()) == 8);
    auto red = reduce_single_class(example_q2());
    CHECK(volume_basis(red.basis) == 7);

    CHECK(volume_space(ShiftedSpace({q("-1/2"), q("-1/3"), q("-1/4")})) == q("-13/12"));
    CHECK(volume_space(ShiftedSpace({q("0"), q("0")})) == 0);
    CHECK(volume_space(ShiftedSpace(std::vector<mpq_class>(4, q("-1/2")))) == -2);

    QQ f;
    RatFunMatrix<QQ> with_zero{{rf(f, {1}), rf(f, {})}, {rf(f, {}), rf(f, {})}};
    LatticeBasis<QQ> bad(f, ShiftedSpace({q("0"), q("0")}), with_zero);
    CHECK_THROWS_AS(volume_basis(bad), error);
}

TEST_CASE("determinant degree") {
    CHECK(det_degree(example_q2()) == 7);

    auto red = reduce_single_class(example_q2());
    CHECK(det_degree(red.basis) == 7);
    long ceils = 0;
    for (const auto& l : red.basis.lengths) ceils += l.ceil();
    CHECK(ceils == 7);  // |d(B)| = sum of ceil lengths on a reduced basis

    QQ f;
    RatFunMatrix<QQ> id{{rf(f, {1}), rf(f, {})}, {rf(f, {}), rf(f, {1})}};
    CHECK(det_degree(LatticeBasis<QQ>(f, ShiftedSpace({q("0"), q("0")}), id)) == 0);

    RatFunMatrix<QQ> sing{{rf(f, {1}), rf(f, {1})}, {rf(f, {1}), rf(f, {1})}};
    CHECK_THROWS_AS(det_degree(LatticeBasis<QQ>(f, ShiftedSpace({q("0"), q("0")}), sing)), error);
}

TEST_CASE("orthogonal defect") {
    CHECK(orthogonal_defect(example_q2()) == 1);
    auto red = reduce_single_class(example_q2());
    CHECK(orthogonal_defect(red.basis) == 0);

    GF f(3);
    RatFunMatrix<GF> id{{rf(f, {1}), rf(f, {})}, {rf(f, {}), rf(f, {1})}};
    LatticeBasis<GF> ortho(f, ShiftedSpace({q("-1/2"), q("-1/3")}), id);
    CHECK(orthogonal_defect(ortho) == 0);

    // an orthonormal basis has volume vol(E) in (-n, 0]
    mpq_class vol = volume_basis(ortho);
    CHECK(vol == volume_space(ortho.space));
    CHECK(vol > -2);
    CHECK(vol <= 0);
}

TEST_CASE("successive minima") {
    auto rep = successive_minima(example_q2());
    CHECK(rep.sm == std::vector<mpq_class>{1, 6});

    auto rep3 = successive_minima(example_f3());
    CHECK(rep3.sm == std::vector<mpq_class>{q("5/3"), q("15/4"), q("9/2")});
    CHECK(rep3.sm_classes[2] == SignatureClass(q("1/2")));

    QQ f;
    RatFunMatrix<QQ> id{{rf(f, {1}), rf(f, {})}, {rf(f, {}), rf(f, {1})}};
    auto repid = successive_minima(LatticeBasis<QQ>(f, ShiftedSpace({q("0"), q("0")}), id));
    CHECK(repid.sm == std::vector<mpq_class>{0, 0});
}

TEST_CASE("sublattice bases of L_{<=r}") {
    auto red = reduce_single_class(example_q2());  // lengths (1, 6)
    auto basis2 = sublattice_basis_leq(red.basis, q("2"));
    CHECK(basis2.size() == 2);  // b1, t b1
    CHECK(dim_leq(red.basis, q("2")) == 2);
    CHECK(basis2[0] == red.basis.rows[0]);
    std::vector<RatFun<QQ>> tb1;
    for (const auto& x : red.basis.rows[0]) tb1.push_back(x.mul_t_power(1));
    CHECK(basis2[1] == tb1);

    CHECK(sublattice_basis_leq(red.basis, q("1/2")).empty());
    CHECK(dim_leq(red.basis, q("1/2")) == 0);

    CHECK(sublattice_basis_leq(red.basis, q("1")).size() == 1);
    CHECK(dim_leq(red.basis, q("1")) == 1);

    CHECK_THROWS_AS(sublattice_basis_leq(example_q2(), q("2")), error);
    CHECK_THROWS_AS(dim_leq(example_q2(), q("2")), error);
}

TEST_CASE("Riemann-Roch dimensions") {
    CHECK(riemann_roch_dim({q("5/3"), q("15/4"), q("9/2")}, 4) == 4);
    CHECK(riemann_roch_dim({q("5/3"), q("15/4"), q("9/2")}, 1) == 0);
    for (long m = 0; m <= 5; ++m) CHECK(riemann_roch_dim({q("0")}, m) == m + 1);
}

TEST_CASE("oracle minima on the F_3(t) example") {
    auto basis = example_f3();
    auto sm = oracle_successive_minima(basis, 3);
    CHECK(sm == std::vector<mpq_class>{q("5/3"), q("15/4"), q("9/2")});
    CHECK(sm == successive_minima(basis).sm);
}

TEST_CASE("oracle on an orthonormal basis returns the shifts") {
    GF f(3);
    RatFunMatrix<GF> id{{rf(f, {1}), rf(f, {})}, {rf(f, {}), rf(f, {1})}};
    LatticeBasis<GF> ortho(f, ShiftedSpace({q("-1/2"), q("-1/3")}), id);
    auto sm = oracle_successive_minima(ortho, 0);
    CHECK(sm == std::vector<mpq_class>{q("-1/2"), q("-1/3")});
}

TEST_CASE("oracle on diag(t, 1) over GF(2)") {
    GF f(2);
    RatFunMatrix<GF> rows{{rf(f, {0, 1}), rf(f, {})}, {rf(f, {}), rf(f, {1})}};
    LatticeBasis<GF> basis(f, ShiftedSpace({q("0"), q("0")}), rows);
    auto sm = oracle_successive_minima(basis, 1);
    CHECK(sm == std::vector<mpq_class>{0, 1});
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS(oracle_successive_minima(example_q2(), 3), error);     // not finite
    CHECK_THROWS_AS(oracle_successive_minima(example_f3(), 2), error);     // bound too small
    CHECK_THROWS_AS(oracle_successive_minima(example_f3(), 6), error);     // 3^21 vectors
    try {
        oracle_successive_minima(example_f3(), 6);
    } catch (const error& e) {
        CHECK(e.code() == errc::enumeration_too_large);
    }
    try {
        oracle_successive_minima(example_f3(), 2);
    } catch (const error& e) {
        CHECK(e.code() == errc::bound_too_small);
    }
}

TEST_CASE("oracle dimension agrees with dim_leq") {
    auto basis = example_f3();
    auto red = reduce_general(basis);
    for (long r : {1L, 2L, 4L, 5L}) {
        CHECK(oracle_dim_leq(basis, 3, mpq_class(r)) == dim_leq(red.basis, mpq_class(r)));
    }
}

TEST_CASE("Hadamard inequality and the OD criterion") {
    for (std::uint64_t seed : {501ull, 502ull}) {
        GF f(seed == 501 ? 2 : 3);
        testutil::InstanceGen<GF> gen(f, seed);
        for (int iter = 0; iter < 40; ++iter) {
            const std::size_t n = 1 + iter % 4;
            auto space = gen.random_space(n);
            auto rows = gen.random_unimodular(n, 5, 6);
            LatticeBasis<GF> basis(f, space, rows);
            mpq_class od = orthogonal_defect(basis);
            CHECK(od >= 0);
            CHECK(is_reduced(basis) == (od == 0));
            auto red = reduce_general(std::move(basis));
            CHECK(orthogonal_defect(red.basis) == 0);
        }
    }
}

TEST_CASE("minima match the oracle on small random instances") {
    int accepted = 0;
    for (std::uint64_t seed = 601; accepted < 12; ++seed) {
        GF f(seed % 2 == 0 ? 2 : 3);
        testutil::InstanceGen<GF> gen(f, seed);
        const std::size_t n = 2 + seed % 2;
        auto space = gen.random_space(n);
        auto rows = gen.random_unimodular(n, 4, 4);
        LatticeBasis<GF> basis(f, space, rows);

        mpq_class maxlen = basis.lengths[0].value(), minlen = maxlen;
        for (const auto& l : basis.lengths) {
            maxlen = std::max(maxlen, l.value());
            minlen = std::min(minlen, l.value());
        }
        mpq_class needed = maxlen + orthogonal_defect(basis) - minlen;
        long bound = std::max(0L, ExtRational(needed).floor());
        double bits = static_cast<double>(n) * (bound + 1) *
                      std::log2(static_cast<double>(f.modulus()));
        if (bits > 18) continue;

        auto fast = successive_minima(basis).sm;
        auto slow = oracle_successive_minima(basis, bound);
        CHECK(fast == slow);
        ++accepted;
    }
}

TEST_CASE("twisting shifts every minimum by the twist") {
    GF f(3);
    testutil::InstanceGen<GF> gen(f, 701);
    for (int iter = 0; iter < 10; ++iter) {
        auto space = gen.random_space(2);
        auto rows = gen.random_unimodular(2, 4, 4);
        auto sm0 = successive_minima(LatticeBasis<GF>(f, space, rows)).sm;

        mpq_class s = q("-3/2");
        std::vector<mpq_class> twisted = space.shifts;
        for (auto& x : twisted) x += s;
        auto prep = prepare_lattice(f, ShiftedSpace(twisted), rows);
        auto sm1 = successive_minima(prep.basis).sm;
        REQUIRE(sm0.size() == sm1.size());
        for (std::size_t i = 0; i < sm0.size(); ++i) CHECK(sm1[i] == sm0[i] + s);
    }
}

TEST_CASE("sm classes are a GL_n(A) invariant") {
    GF f(2);
    testutil::InstanceGen<GF> gen(f, 801);
    for (int iter = 0; iter < 10; ++iter) {
        auto space = gen.random_space(3);
        auto u1 = gen.random_unimodular(3, 4, 5);
        auto u2 = gen.random_unimodular(3, 4, 5);
        auto basis1 = LatticeBasis<GF>(f, space, u1);
        auto rows2 = ratfun_matrix_mul(u2, u1, f);
        if (height_matrix(rows2) > 6) continue;
        auto basis2 = LatticeBasis<GF>(f, space, rows2);

        auto c1 = successive_minima(basis1).sm_classes;
        auto c2 = successive_minima(basis2).sm_classes;
        auto lt = [](const SignatureClass& a, const SignatureClass& b) { return a < b; };
        std::sort(c1.begin(), c1.end(), lt);
        std::sort(c2.begin(), c2.end(), lt);
        CHECK(c1 == c2);
    }
}
