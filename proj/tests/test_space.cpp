#include <catch2/catch_amalgamated.hpp>

#include "skewcanon/space.hpp"
#include "test_helpers.hpp"

using namespace skewcanon;
using skewcanon::testing::diag;

namespace {
const ScalarContext kExact = ScalarContext::exact();

Matrix<Rational> rot2(long lambda) {
    return Matrix<Rational>{{Rational(0), Rational(lambda)}, {Rational(-lambda), Rational(0)}};
}
}

TEST_CASE("validate_pair accepts and rejects per invariant", "[space]") {
    CHECK_NOTHROW(validate_pair(Matrix<Rational>::identity(2), rot2(1), kExact));

    // J symmetric but skewadjoint for the indefinite form diag(1,-1)
    Matrix<Rational> g = diag({Rational(1), Rational(-1)});
    Matrix<Rational> j{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK_NOTHROW(validate_pair(g, j, kExact));

    CHECK_THROWS_AS(validate_pair(Matrix<Rational>::identity(2), Matrix<Rational>::identity(2), kExact),
                    NotSkewadjoint);
    Matrix<Rational> nonsym{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    CHECK_THROWS_AS(validate_pair(nonsym, rot2(1), kExact), NotSymmetric);
    CHECK_THROWS_AS(validate_pair(Matrix<Rational>::zero(2, 2), rot2(1), kExact), DegenerateForm);
}

TEST_CASE("restrict_pair", "[space]") {
    // 4-dim block pair: imaginary block on coords {0,1}, real block on {2,3}
    Matrix<Rational> g(4, 4), j(4, 4);
    g.set_block(0, 0, Matrix<Rational>::identity(2));
    g(2, 3) = Rational(1);
    g(3, 2) = Rational(1);
    j.set_block(0, 0, rot2(1));
    j(2, 2) = Rational(2);
    j(3, 3) = Rational(-2);
    SpacePair<Rational> pair = validate_pair(g, j, kExact);

    SECTION("whole space with identity basis gives the same pair") {
        SpacePair<Rational> r = restrict_pair(pair, Subspace<Rational>::whole(4));
        CHECK(r.gram() == g);
        CHECK(r.op() == j);
    }

    SECTION("first two coordinates carve out the imaginary block") {
        Matrix<Rational> b(4, 2);
        b(0, 0) = Rational(1);
        b(1, 1) = Rational(1);
        SpacePair<Rational> r = restrict_pair(pair, Subspace<Rational>{4, b});
        CHECK(r.gram() == Matrix<Rational>::identity(2));
        CHECK(r.op() == rot2(1));
    }

    SECTION("a non-invariant subspace is rejected") {
        Matrix<Rational> b(4, 1);
        b(0, 0) = Rational(1);
        CHECK_THROWS_AS(restrict_pair(pair, Subspace<Rational>{4, b}), NotInvariant);
    }

    SECTION("a null line is a degenerate restriction") {
        Matrix<Rational> g2 = diag({Rational(1), Rational(-1)});
        Matrix<Rational> j2{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
        SpacePair<Rational> p2 = validate_pair(g2, j2, kExact);
        Matrix<Rational> null_line(2, 1);
        null_line(0, 0) = Rational(1);
        null_line(1, 0) = Rational(1);
        CHECK_THROWS_AS(restrict_pair(p2, Subspace<Rational>{2, null_line}), DegenerateRestriction);
    }
}

TEST_CASE("orthogonal_complement", "[space]") {
    SECTION("span{e1} in Euclidean 3-space") {
        SpacePair<Rational> p = validate_pair(Matrix<Rational>::identity(3), Matrix<Rational>::zero(3, 3), kExact);
        Matrix<Rational> b(3, 1);
        b(0, 0) = Rational(1);
        Subspace<Rational> comp = orthogonal_complement(p, Subspace<Rational>{3, b});
        REQUIRE(comp.dim() == 2);
        CHECK(comp.basis(0, 0) == Rational(0));
        CHECK(comp.basis(0, 1) == Rational(0));
    }

    SECTION("a null direction is rejected") {
        SpacePair<Rational> p =
            validate_pair(diag({Rational(1), Rational(-1), Rational(1)}), Matrix<Rational>::zero(3, 3), kExact);
        Matrix<Rational> b(3, 1);
        b(0, 0) = Rational(1);
        b(1, 0) = Rational(1);
        CHECK_THROWS_AS(orthogonal_complement(p, Subspace<Rational>{3, b}), DegenerateRestriction);
    }

    SECTION("an isotropic plane of the 4x4 antidiagonal form is rejected") {
        Matrix<Rational> g(4, 4);
        for (int i = 0; i < 4; ++i) g(i, 3 - i) = Rational(1);
        SpacePair<Rational> p = validate_pair(g, Matrix<Rational>::zero(4, 4), kExact);
        Matrix<Rational> b(4, 2);
        b(0, 0) = Rational(1);
        b(1, 1) = Rational(1);
        CHECK_THROWS_AS(orthogonal_complement(p, Subspace<Rational>{4, b}), DegenerateRestriction);
    }
}

TEST_CASE("complement splits dimension and signature", "[space][property]") {
    SeededRng rng(5150);
    const int n = 5;
    for (int trial = 0; trial < 15; ++trial) {
        // random symmetric nonsingular G, J = 0 keeps every subspace invariant
        Matrix<Rational> g;
        for (;;) {
            Matrix<Rational> a = skewcanon::testing::random_rational_matrix(rng, n, n);
            g = a + a.transpose();
            if (rank(g, kExact) == n) break;
        }
        SpacePair<Rational> p = validate_pair(g, Matrix<Rational>::zero(n, n), kExact);
        Matrix<Rational> b = skewcanon::testing::random_rational_matrix(rng, n, 2);
        Subspace<Rational> w{n, b};
        if (rank(b, kExact) < 2) continue;
        if (rank(restricted_gram(p, w), kExact) < 2) continue; // degenerate draw
        Subspace<Rational> comp = orthogonal_complement(p, w);
        CHECK(w.dim() + comp.dim() == n);
        auto s_whole = signature(g, kExact);
        auto s_w = signature(restrict_pair(p, w).gram(), kExact);
        auto s_c = signature(restrict_pair(p, comp).gram(), kExact);
        CHECK(s_w.first + s_c.first == s_whole.first);
        CHECK(s_w.second + s_c.second == s_whole.second);
    }
}
