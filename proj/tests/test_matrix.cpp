#include <doctest.h>

#include <random>

#include "octachain/decomposition.hpp"
#include "octachain/invariants.hpp"
#include "octachain/matrix.hpp"
#include "oracles.hpp"

using namespace octachain;

namespace {

RationalMatrix random_int_matrix(std::mt19937& rng, int dim, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> entry(lo, hi);
    RationalMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("laplacian of the one-octagon chain") {
    const ChainGraph g(1);
    const RationalMatrix lap = laplacian(g);
    const int expected_diag[] = {3, 4, 4, 3, 3, 4, 4, 3};
    for (int i = 0; i < 8; ++i) CHECK(lap.at(i, i) == expected_diag[i]);
    // crossed edge (1, 2')
    CHECK(lap.at(g.linear_index({Copy::V1, 1}), g.linear_index({Copy::V2, 2})) == -1);
    CHECK(lap.is_symmetric());
}

TEST_CASE("laplacian row sums vanish") {
    for (int n = 1; n <= 4; ++n) {
        for (const Rational& s : laplacian(ChainGraph(n)).row_sums()) CHECK(s == 0);
    }
}

TEST_CASE("normalized similar matrix") {
    const ChainGraph g(1);
    const RationalMatrix m = normalized_similar(g);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == make_rational(-1, 3));
    for (const Rational& s : m.row_sums()) CHECK(s == 0);
    CHECK(m.trace() == 8);
    CHECK(normalized_similar(ChainGraph(3)).trace() == 20);
}

TEST_CASE("determinant basics") {
    CHECK(determinant(RationalMatrix::identity(5)) == 1);
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), std::invalid_argument);

    // leading principal minors of the sum block follow w_i = 2^i
    const RationalMatrix sum = decompose(ChainGraph(1)).sum;
    CHECK(determinant(sum.leading_principal(3)) == 8);

    // interior tridiagonal block with diagonal 4 and off-diagonal -2
    RationalMatrix x2(2, 2);
    x2.at(0, 0) = 4;
    x2.at(0, 1) = -2;
    x2.at(1, 0) = -2;
    x2.at(1, 1) = 4;
    CHECK(determinant(x2) == 12);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937 rng(20240817);
    for (int dim = 1; dim <= 6; ++dim) {
        for (int trial = 0; trial < 12; ++trial) {
            const RationalMatrix m = random_int_matrix(rng, dim);
            CHECK(determinant(m) == oracle::cofactor_expansion_det(m));
        }
    }
}

TEST_CASE("determinant of rational-entried matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = make_rational(num(rng), den(rng));
        CHECK(determinant(m) == oracle::gauss_det(m));
    }
}

TEST_CASE("char_poly of the sum block at n=1") {
    const CharPoly p = char_poly(decompose(ChainGraph(1)).sum);
    CHECK(p.degree() == 4);
    CHECK(p.coeff(4) == 1);
    CHECK(p.coeff(0) == 0);
    CHECK(abs(p.coeff(1)) == 32);  // (3n+1) * 2^{3n}
    CHECK(abs(p.coeff(2)) == 40);  // n(3n+1)(3n+2) * 2^{3n-2}
}

TEST_CASE("char_poly of the zero matrix is x^N") {
    const CharPoly p = char_poly(RationalMatrix(2, 2));
    CHECK(p.coeffs() == std::vector<Rational>{0, 0, 1});
    CHECK_THROWS_AS(char_poly(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly coefficients equal signed principal minor sums") {
    std::mt19937 rng(99);
    for (int dim = 2; dim <= 5; ++dim) {
        const RationalMatrix m = random_int_matrix(rng, dim, -3, 3);
        const CharPoly p = char_poly(m);  // dense path
        CHECK(p.degree() == dim);
        CHECK(p.coeff(dim - 1) == -m.trace());
        for (int order = 0; order <= dim; ++order) {
            CHECK(p.principal_minor_total(order) ==
                  oracle::principal_minor_sum_enumerated(m, order));
        }
        const Rational det = oracle::gauss_det(m);
        CHECK(p.coeff(0) == ((dim % 2 == 0) ? det : Rational(-det)));
        CHECK(p.evaluate(0) == p.coeff(0));
        RationalMatrix shifted(dim, dim);  // 3I - m
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) shifted.at(i, j) = (i == j ? 3 : 0) - m.at(i, j);
        CHECK(p.evaluate(3) == oracle::gauss_det(shifted));
    }
}

TEST_CASE("tridiagonal recurrence path agrees with the minor-sum oracle") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int dim = 2; dim <= 7; ++dim) {
        RationalMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            m.at(i, i) = entry(rng);
            if (i + 1 < dim) {
                m.at(i, i + 1) = entry(rng);
                m.at(i + 1, i) = entry(rng);
            }
        }
        REQUIRE(m.is_tridiagonal());
        const CharPoly p = char_poly(m);
        for (int order = 0; order <= dim; ++order) {
            CHECK(p.principal_minor_total(order) ==
                  oracle::principal_minor_sum_enumerated(m, order));
        }
    }
}

TEST_CASE("solve basics") {
    const std::vector<Rational> b{make_rational(1, 3), Rational(2), Rational(-7)};
    CHECK(solve(RationalMatrix::identity(3), b) == b);

    RationalMatrix zero(1, 1);
    try {
        solve(zero, {Rational(1)});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.stage == 0);
        CHECK(std::string(e.what()).find("stage 0") != std::string::npos);
    }
}

TEST_CASE("solve round-trips exactly on random systems") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 15; ++trial) {
        RationalMatrix m = random_int_matrix(rng, 5);
        while (determinant(m) == 0) m = random_int_matrix(rng, 5);
        std::vector<Rational> b(5);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (auto& x : b) x = entry(rng);
        const auto x = solve(m, b);
        for (int i = 0; i < 5; ++i) {
            Rational acc = 0;
            for (int j = 0; j < 5; ++j) acc += m.at(i, j) * x[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("grounded solve reproduces the effective resistance") {
    const ChainGraph g(1);
    const RationalMatrix grounded = laplacian(g).without_row_col(7);  // ground 4'
    std::vector<Rational> b(7, Rational(0));
    b[0] = 1;  // unit current into vertex 1, out at the ground
    const auto potentials = solve(grounded, b);
    CHECK(potentials[0] == effective_resistance(g, {Copy::V1, 1}, {Copy::V2, 4}));
    CHECK(potentials[0] == oracle::resistance_two_forest(g, 0, 7));
}

TEST_CASE("principal minor sums") {
    const MirrorDecomposition d = decompose(ChainGraph(1));
    CHECK(principal_minor_sum(d.sum, 3) == 32);
    CHECK(principal_minor_sum(d.norm_sum, 3) == make_rational(7, 9));
    CHECK(principal_minor_sum(d.sum, 0) == 1);
    CHECK_THROWS_AS(principal_minor_sum(d.sum, 5), std::out_of_range);
    CHECK_THROWS_AS(principal_minor_sum(d.sum, -1), std::out_of_range);
    // subset enumeration is capped at dimension 16 below order dim-1
    CHECK_THROWS_AS(principal_minor_sum(RationalMatrix::identity(17), 3),
                    std::invalid_argument);
    // but the char-poly shortcut still serves the top orders at any size
    CHECK(principal_minor_sum(RationalMatrix::identity(17), 16) == 17);
}

TEST_CASE("principal minor sums match enumeration at every order") {
    std::mt19937 rng(31337);
    const RationalMatrix m = random_int_matrix(rng, 5, -2, 2);
    for (int order = 0; order <= 5; ++order) {
        CHECK(principal_minor_sum(m, order) == oracle::principal_minor_sum_enumerated(m, order));
    }
}

TEST_CASE("cofactor_det") {
    const ChainGraph g(1);
    const RationalMatrix lap = laplacian(g);
    const Rational first = cofactor_det(lap, 0);
    CHECK(first == 1024);
    for (int i = 1; i < 8; ++i) CHECK(cofactor_det(lap, i) == first);

    RationalMatrix p2(2, 2);
    p2.at(0, 0) = 1;
    p2.at(0, 1) = -1;
    p2.at(1, 0) = -1;
    p2.at(1, 1) = 1;
    CHECK(cofactor_det(p2, 0) == 1);
    CHECK_THROWS_AS(cofactor_det(p2, 2), std::out_of_range);
}

TEST_CASE("matrix-tree count appears in the Laplacian characteristic polynomial") {
    for (int n = 1; n <= 4; ++n) {
        const ChainGraph g(n);
        const CharPoly p = char_poly(laplacian(g));
        const int N = g.vertex_count();
        CHECK(p.coeff(0) == 0);
        const Rational tree_term = p.principal_minor_total(N - 1);
        CHECK(tree_term == Rational(static_cast<long>(N)) * cofactor_det(laplacian(g), 0));
    }
}
