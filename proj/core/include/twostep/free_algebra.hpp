#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "twostep/matrix.hpp"
#include "twostep/tensor.hpp"

namespace twostep {

/// The ordered-pair coordinate system on the commutator space V of the free
/// two-step algebra on q generators: pairs (i, j), i < j, in lexicographic
/// order. dim V = q(q-1)/2.
class PairBasis {
public:
    explicit PairBasis(int q);

    int q() const { return q_; }
    int size() const { return q_ * (q_ - 1) / 2; }
    /// 0-based coordinate of the pair (i, j), 1 <= i < j <= q.
    int index(int i, int j) const;
    /// Inverse of index().
    std::pair<int, int> pair(int coordinate) const;

private:
    int q_;
};

/// A subspace of the pair space V, canonicalized to reduced row echelon form
/// so that equality of ideals is row-space equality. The full space is
/// representable (it is the complement of the zero ideal) but cannot be
/// quotiented by.
class RelationIdeal {
public:
    static RelationIdeal from_span(int q, const RatMatrix& rows);
    static RelationIdeal zero(int q);

    int q() const { return q_; }
    int dim() const { return span_.rows(); }
    /// RREF rows over the lexicographic pair coordinates; no zero rows.
    const RatMatrix& span() const { return span_; }
    const std::vector<int>& pivots() const { return pivots_; }

    friend bool operator==(const RelationIdeal& a, const RelationIdeal& b) {
        return a.q_ == b.q_ && a.span_ == b.span_;
    }
    friend bool operator!=(const RelationIdeal& a, const RelationIdeal& b) { return !(a == b); }

private:
    RelationIdeal(int q, RatMatrix span, std::vector<int> pivots)
        : q_(q), span_(std::move(span)), pivots_(std::move(pivots)) {}
    int q_;
    RatMatrix span_;
    std::vector<int> pivots_;
};

/// Parses relation-ideal text: terms `[u<i>,u<j>]` with optional rational
/// coefficients joined by `+`/`-`; spanning vectors separated by `;`.
/// Example: "[u1,u2]+[u5,u6]; [u3,u4]+[u5,u6]". A term [u_j, u_i] with j > i
/// contributes with a flipped sign. Rejects malformed input, vectors that
/// cancel to zero, and spans that fill all of V.
RelationIdeal parse_relation(int q, std::string_view expr);

/// The free two-step nilpotent Lie algebra on q generators: every pair
/// bracket is an independent center element; dimension q(q+1)/2.
TwoStepAlgebra free_algebra(int q);

/// Orthogonal complement inside V under the standard dot product on pair
/// coordinates; an involution on canonicalized ideals.
RelationIdeal orthogonal_complement(const RelationIdeal& ideal);

/// An algebra together with the relation ideal presenting it; duality is
/// defined on presentations.
struct PresentedAlgebra {
    TwoStepAlgebra algebra;
    RelationIdeal ideal;
};

/// N^q / I. The center basis is the set of pair coordinates free of the
/// ideal's RREF pivots, in lexicographic order; the bracket of (x_i, x_j) is
/// the reduction of the pair (i, j) modulo the ideal in those coordinates.
PresentedAlgebra quotient(int q, const RelationIdeal& ideal);

/// Gauger dual: N^q / I maps to N^q / I-perp.
PresentedAlgebra dual(const PresentedAlgebra& presented);

}  // namespace twostep
