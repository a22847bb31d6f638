#include <doctest.h>

#include "test_support.hpp"
#include "twostep/catalog.hpp"
#include "twostep/error.hpp"
#include "twostep/matrix.hpp"

using namespace twostep;

namespace {

// Test-local oracle: plain Gaussian elimination with rational division, no
// fraction-free steps, no shared code with rank().
int naive_rank(RatMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RatMatrix::identity(5)) == 5);
    CHECK(rank(RatMatrix(3, 7)) == 0);
    RatMatrix a{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(rank(a) == 1);
}

TEST_CASE("rank of the N^{8,2}_1 slice matrix is 4") {
    const auto& entry = catalog_entry("N^{8,2}_1");
    CHECK(rank(entry.algebra.tensor().slice(1)) == 4);
    CHECK(rank(entry.algebra.tensor().slice(2)) == 4);
}

TEST_CASE("rank agrees with a naive row-reduction oracle on random matrices") {
    test::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = static_cast<int>(rng.integer(1, 7));
        int cols = static_cast<int>(rng.integer(1, 7));
        RatMatrix m = rng.matrix(rows, cols, 5);
        CHECK(rank(m) == naive_rank(m));
    }
    // Structured low-rank inputs: outer products.
    for (int trial = 0; trial < 15; ++trial) {
        RatMatrix u = rng.matrix(5, 1, 4);
        RatMatrix v = rng.matrix(1, 5, 4);
        RatMatrix m = u * v;
        CHECK(rank(m) == naive_rank(m));
    }
}

TEST_CASE("nullspace") {
    CHECK(nullspace(RatMatrix::identity(4)).empty());
    RatMatrix m{{Rational(1), Rational(-1)}};
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0, 0) == Rational(1));
    CHECK(basis[0].at(1, 0) == Rational(1));
    // Basis vectors always satisfy M v = 0 and count cols - rank.
    test::Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix r = rng.matrix(static_cast<int>(rng.integer(1, 5)), static_cast<int>(rng.integer(1, 6)), 4);
        auto ns = nullspace(r);
        CHECK(static_cast<int>(ns.size()) == r.cols() - rank(r));
        for (const RatMatrix& v : ns) CHECK((r * v).is_zero());
    }
}

TEST_CASE("determinant and inverse") {
    RatMatrix m{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(det(m) == Rational(1));
    CHECK(inverse(m) * m == RatMatrix::identity(2));
    CHECK(det(RatMatrix::identity(6)) == Rational(1));
    RatMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(det(singular) == Rational(0));
    CHECK_THROWS_AS(inverse(singular), SingularMatrix);
    CHECK_THROWS_AS(det(RatMatrix(2, 3)), ShapeMismatch);

    test::Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        RatMatrix a = rng.nonsingular(4);
        CHECK(a * inverse(a) == RatMatrix::identity(4));
        CHECK(det(a) * det(inverse(a)) == Rational(1));
    }
}

TEST_CASE("det is multiplicative on random pairs") {
    test::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix a = rng.matrix(4, 4, 3);
        RatMatrix b = rng.matrix(4, 4, 3);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("rref produces reduced echelon form") {
    RatMatrix m{{Rational(0), Rational(2), Rational(4)}, {Rational(1), Rational(1), Rational(1)}};
    auto [red, pivots] = rref(m);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 1);
    CHECK(red.at(0, 0) == Rational(1));
    CHECK(red.at(0, 1) == Rational(0));
    CHECK(red.at(1, 1) == Rational(1));
    auto full = rref_with_transform(m);
    CHECK(full.transform * m == full.reduced);
}

TEST_CASE("det_poly basics") {
    RatMatrix one{{Rational(1)}};
    CHECK(det_poly(one, one) == RatPoly({Rational(1), Rational(1)}));
    RatMatrix a{{Rational(2), Rational(0)}, {Rational(0), Rational(3)}};
    CHECK(det_poly(a, RatMatrix(2, 2)) == RatPoly::constant(6));
    CHECK_THROWS_AS(det_poly(RatMatrix(2, 2), RatMatrix(3, 3)), ShapeMismatch);
}

TEST_CASE("det_poly of the N^{8,2}_1 pencil is t^2 (1+t)^2") {
    const auto& entry = catalog_entry("N^{8,2}_1");
    RatMatrix a = entry.algebra.tensor().slice(1);
    RatMatrix b = entry.algebra.tensor().slice(2);
    RatPoly t = RatPoly::t();
    RatPoly one_plus_t{Rational(1), Rational(1)};
    CHECK(det_poly(a, b) == t * t * one_plus_t * one_plus_t);
}

TEST_CASE("det_poly agrees with direct determinants at 20 random points") {
    test::Rng rng(47);
    RatMatrix a = rng.matrix(4, 4, 3);
    RatMatrix b = rng.matrix(4, 4, 3);
    RatPoly p = det_poly(a, b);
    for (int trial = 0; trial < 20; ++trial) {
        Rational t0 = rng.rational(9);
        CHECK(p.eval(t0) == det(a + b * t0));
    }
}

TEST_CASE("pencil rank is generic away from the drop locus") {
    const auto& entry = catalog_entry("N^{8,2}_1");
    RatMatrix a = entry.algebra.tensor().slice(1);
    RatMatrix b = entry.algebra.tensor().slice(2);
    // Drop polynomial of this pencil is t(t+1); any other rational point has
    // the generic rank 6.
    test::Rng rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        Rational t0 = rng.rational(9);
        if (t0 == Rational(0) || t0 == Rational(-1)) continue;
        CHECK(rank(a + b * t0) == 6);
    }
    CHECK(rank(a) == 4);
    CHECK(rank(a + b * Rational(-1)) == 4);
}

TEST_CASE("hcat and submatrix") {
    RatMatrix a = RatMatrix::identity(2);
    RatMatrix b{{Rational(5)}, {Rational(6)}};
    std::vector<RatMatrix> blocks{a, b};
    RatMatrix c = hcat(blocks);
    CHECK(c.cols() == 3);
    CHECK(c.at(1, 2) == Rational(6));
    std::vector<int> rows{0}, cols{2};
    CHECK(c.submatrix(rows, cols).at(0, 0) == Rational(5));
}
