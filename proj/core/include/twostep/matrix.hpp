#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "twostep/polynomial.hpp"
#include "twostep/rational.hpp"

namespace twostep {

/// Dense matrix over Q, row-major. Zero-sized shapes are legal.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c);
    const Rational& at(int r, int c) const;

    RatMatrix transpose() const;
    bool is_zero() const;

    RatMatrix row(int r) const;
    RatMatrix col(int c) const;
    RatMatrix submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const;

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    RatMatrix operator*(const Rational& s) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

/// Horizontal concatenation [blocks_0 | blocks_1 | ...]; all blocks share a row count.
RatMatrix hcat(std::span<const RatMatrix> blocks);
RatMatrix vcat(std::span<const RatMatrix> blocks);

struct RrefResult {
    RatMatrix reduced;        ///< reduced row echelon form, zero rows trailing
    std::vector<int> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan over Q. Used for canonical forms and as the independent
/// rank route in tests; `rank` below takes the fraction-free path.
RrefResult rref(const RatMatrix& m);

struct RrefTransform {
    RatMatrix reduced;
    RatMatrix transform;  ///< invertible; transform * input = reduced
    std::vector<int> pivots;
};

RrefTransform rref_with_transform(const RatMatrix& m);

/// Exact rank by fraction-free (Bareiss) elimination with full pivoting,
/// after scaling each row to integers.
int rank(const RatMatrix& m);

/// Basis of the right kernel as column vectors; size cols - rank.
std::vector<RatMatrix> nullspace(const RatMatrix& m);

/// Determinant by fraction-free elimination. Throws on non-square input.
Rational det(const RatMatrix& m);

/// Throws SingularMatrix when no inverse exists.
RatMatrix inverse(const RatMatrix& m);

/// det(A + tB) as an exact polynomial in t, computed by evaluating the
/// determinant at degree+1 rational points and interpolating.
RatPoly det_poly(const RatMatrix& a, const RatMatrix& b);

}  // namespace twostep
