#pragma once

#include <utility>
#include <vector>

#include "twostep/matrix.hpp"
#include "twostep/polynomial.hpp"

namespace twostep {

/// Matrix over Q[t]/(m(t)) for a squarefree modulus m. Entries are stored
/// reduced, so every entry has degree < deg m.
class QuotientRingMatrix {
public:
    QuotientRingMatrix(RatPoly modulus, int rows, int cols);

    /// The pencil A + tB reduced modulo m.
    static QuotientRingMatrix pencil(const RatMatrix& a, const RatMatrix& b, const RatPoly& modulus);

    const RatPoly& modulus() const { return modulus_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatPoly& at(int r, int c);
    const RatPoly& at(int r, int c) const;

private:
    RatPoly modulus_;
    int rows_, cols_;
    std::vector<RatPoly> e_;
};

/// Remainder of p modulo m, monic m assumed nonconstant.
RatPoly poly_mod(const RatPoly& p, const RatPoly& m);
/// Inverse of p in Q[t]/(m); requires gcd(p, m) = 1.
RatPoly poly_inverse_mod(const RatPoly& p, const RatPoly& m);

/// Rank of the matrix over Q[t]/(f) for each factor f of the (squarefree)
/// modulus that elimination separates. Pivoting inverts entries coprime to
/// the current modulus; an entry with a nontrivial gcd is a zero divisor and
/// splits the modulus into coprime parts, each eliminated independently.
/// Returned moduli are pairwise coprime, multiply to the input modulus, and
/// each carries the rank valid at all of its roots.
std::vector<std::pair<RatPoly, int>> rank_split(const QuotientRingMatrix& m);

/// Rank of A + tau*B where tau is any root of the irreducible modulus m.
/// Well defined because conjugate roots give equal rank. Throws NotSquarefree
/// when m has repeated roots, and an Error when m is demonstrably reducible
/// with rank differing between its factors.
int rank_at_root(const RatMatrix& a, const RatMatrix& b, const RatPoly& m);

}  // namespace twostep
