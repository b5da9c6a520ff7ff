#include <catch2/catch_amalgamated.hpp>

#include "skewcanon/linalg.hpp"
#include "skewcanon/polynomial.hpp"
#include "test_helpers.hpp"

using namespace skewcanon;
using skewcanon::testing::diag;
using skewcanon::testing::random_nonsingular_rational;
using skewcanon::testing::random_rational_matrix;

namespace {
const ScalarContext kExact = ScalarContext::exact();
const ScalarContext kFloat = ScalarContext::floating();
}

TEST_CASE("kernel_basis on fixed matrices", "[linalg]") {
    CHECK(kernel_basis(Matrix<Rational>::identity(2), kExact).cols() == 0);
    CHECK(kernel_basis(Matrix<Rational>::zero(3, 3), kExact).cols() == 3);

    Matrix<Rational> m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    Matrix<Rational> k = kernel_basis(m, kExact);
    REQUIRE(k.cols() == 1);
    // span{(-2, 1)}
    CHECK(k(0, 0) == Rational(-2));
    CHECK(k(1, 0) == Rational(1));
}

TEST_CASE("kernel_basis float mode", "[linalg]") {
    Matrix<double> m{{1.0, 2.0}, {2.0, 4.0}};
    Matrix<double> k = kernel_basis(m, kFloat);
    REQUIRE(k.cols() == 1);
    // the kernel line is spanned by (-2, 1)/sqrt(5)
    double ratio = k(0, 0) / k(1, 0);
    CHECK_THAT(ratio, Catch::Matchers::WithinAbs(-2.0, 1e-12));
    CHECK(kernel_basis(Matrix<double>::identity(4), kFloat).cols() == 0);
}

TEST_CASE("solve on fixed systems", "[linalg]") {
    auto x = solve(Matrix<Rational>::identity(2),
                   Matrix<Rational>::column({Rational(3), Rational(4)}), kExact);
    REQUIRE(x.has_value());
    CHECK((*x)(0, 0) == Rational(3));
    CHECK((*x)(1, 0) == Rational(4));

    Matrix<Rational> a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    CHECK_FALSE(solve(a, Matrix<Rational>::column({Rational(1), Rational(3)}), kExact).has_value());

    Matrix<Rational> d{{Rational(2), Rational(0)}, {Rational(0), Rational(4)}};
    auto y = solve(d, Matrix<Rational>::column({Rational(1), Rational(2)}), kExact);
    REQUIRE(y.has_value());
    CHECK((*y)(0, 0) == Rational(1, 2));
    CHECK((*y)(1, 0) == Rational(1, 2));
}

TEST_CASE("evaluate_matrix_polynomial fixed cases", "[linalg]") {
    Matrix<Rational> rot{{Rational(0), Rational(2)}, {Rational(-2), Rational(0)}};
    // p = t reproduces J
    CHECK(evaluate_matrix_polynomial(rot, Polynomial<Rational>::t()) == rot);
    // p = t^2 + 4 annihilates the rotation generator
    Polynomial<Rational> p({Rational(4), Rational(0), Rational(1)});
    CHECK(evaluate_matrix_polynomial(rot, p).is_zero());

    Matrix<Rational> d = diag({Rational(3), Rational(-3)});
    Polynomial<Rational> q({Rational(-3), Rational(1)});
    Matrix<Rational> r = evaluate_matrix_polynomial(d, q);
    CHECK(r(0, 0) == Rational(0));
    CHECK(r(1, 1) == Rational(-6));
}

TEST_CASE("signature fixed cases", "[linalg]") {
    CHECK(signature(diag({Rational(1), Rational(-1)}), kExact) == std::pair<int, int>(1, 1));
    CHECK(signature(Matrix<Rational>::identity(3), kExact) == std::pair<int, int>(3, 0));

    Matrix<Rational> anti{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(signature(anti, kExact) == std::pair<int, int>(1, 1));

    CHECK_THROWS_AS(signature(Matrix<Rational>::zero(2, 2), kExact), DegenerateForm);

    Matrix<double> antif{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(signature(antif, kFloat) == std::pair<int, int>(1, 1));
}

TEST_CASE("invert fixed cases", "[linalg]") {
    CHECK(invert(Matrix<Rational>::identity(4), kExact) == Matrix<Rational>::identity(4));

    Matrix<Rational> d = diag({Rational(2), Rational(-2)});
    CHECK(invert(d, kExact) == diag({Rational(1, 2), Rational(-1, 2)}));

    Matrix<Rational> m{{Rational(1), Rational(1)}, {Rational(1), Rational(2)}};
    Matrix<Rational> expected{{Rational(2), Rational(-1)}, {Rational(-1), Rational(1)}};
    CHECK(invert(m, kExact) == expected);

    CHECK_THROWS_AS(invert(Matrix<Rational>{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, kExact),
                    SingularMatrix);
}

TEST_CASE("rank-nullity over random rational matrices", "[linalg][property]") {
    SeededRng rng(20240801);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 8));
        int m = static_cast<int>(rng.int_in(1, 8));
        Matrix<Rational> a = random_rational_matrix(rng, m, n);
        CHECK(rank(a, kExact) + kernel_basis(a, kExact).cols() == n);
        // every kernel column really is annihilated
        Matrix<Rational> k = kernel_basis(a, kExact);
        CHECK((a * k).is_zero());
    }
}

TEST_CASE("solve round-trips exactly on consistent systems", "[linalg][property]") {
    SeededRng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 7));
        Matrix<Rational> a = random_rational_matrix(rng, n, n);
        Matrix<Rational> x0 = random_rational_matrix(rng, n, 1);
        Matrix<Rational> b = a * x0;
        auto x = solve(a, b, kExact);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("matrix polynomial evaluation is a ring homomorphism", "[linalg][property]") {
    SeededRng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 5));
        Matrix<Rational> j = random_rational_matrix(rng, n, n);
        auto rand_poly = [&rng]() {
            int deg = static_cast<int>(rng.int_in(0, 3));
            std::vector<Rational> c;
            for (int i = 0; i <= deg; ++i) c.emplace_back(rng.int_in(-3, 3));
            return Polynomial<Rational>(std::move(c));
        };
        Polynomial<Rational> p = rand_poly(), q = rand_poly();
        CHECK(evaluate_matrix_polynomial(j, p * q) ==
              evaluate_matrix_polynomial(j, p) * evaluate_matrix_polynomial(j, q));
    }
}

TEST_CASE("signature is congruence invariant", "[linalg][property]") {
    SeededRng rng(90125);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 6));
        // random symmetric nonsingular G
        Matrix<Rational> g;
        for (;;) {
            Matrix<Rational> a = random_rational_matrix(rng, n, n);
            g = a + a.transpose();
            if (rank(g, kExact) == n) break;
        }
        Matrix<Rational> p = random_nonsingular_rational(rng, n);
        CHECK(signature(p.transpose() * g * p, kExact) == signature(g, kExact));
    }
}

TEST_CASE("complex elimination over Gaussian rationals", "[linalg]") {
    using C = Complex<Rational>;
    // (J - 2i I) for the rotation generator with lambda = 2 has a 1-dim kernel
    Matrix<C> m{{C(Rational(0), Rational(-2)), C(Rational(2))},
                {C(Rational(-2)), C(Rational(0), Rational(-2))}};
    Matrix<C> k = kernel_basis(m, kExact);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
}
