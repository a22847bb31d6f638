#pragma once

#include <cstdint>
#include <random>

#include "twostep/free_algebra.hpp"
#include "twostep/matrix.hpp"
#include "twostep/tensor.hpp"

namespace twostep::test {

/// Seeded generators for the randomized suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(engine_);
    }

    Rational rational(long height = 6) { return {integer(-height, height), integer(1, height)}; }

    Rational nonzero_rational(long height = 6) {
        for (;;) {
            Rational r = rational(height);
            if (!r.is_zero()) return r;
        }
    }

    RatMatrix matrix(int rows, int cols, long height = 6) {
        RatMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(integer(-height, height));
        return m;
    }

    RatMatrix nonsingular(int n, long height = 4) {
        for (;;) {
            RatMatrix m = matrix(n, n, height);
            if (rank(m) == n) return m;
        }
    }

    BasisChange basis_change(int q, int p, long height = 4) {
        return {nonsingular(q, height), nonsingular(p, height)};
    }

    /// Permutation times nonzero diagonal on both blocks.
    BasisChange monomial_change(int q, int p, long height = 5) {
        auto monomial = [&](int n) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), engine_);
            RatMatrix m(n, n);
            for (int i = 0; i < n; ++i) {
                Rational scale(integer(1, height));
                if (integer(0, 1)) scale = -scale;
                m.at(perm[static_cast<std::size_t>(i)], i) = scale;
            }
            return m;
        };
        return {monomial(q), monomial(p)};
    }

    /// Random proper ideal of the pair space on q generators.
    RelationIdeal ideal(int q, int min_dim = 1) {
        PairBasis basis(q);
        for (;;) {
            int target = static_cast<int>(integer(min_dim, basis.size() - 1));
            RelationIdeal candidate = RelationIdeal::from_span(q, matrix(target, basis.size(), 2));
            if (candidate.dim() >= min_dim && candidate.dim() < basis.size()) return candidate;
        }
    }

    /// A valid algebra: the quotient of a random proper ideal, optionally
    /// capped in center dimension by choosing a large enough ideal. For q = 2
    /// the only proper ideal is zero, so the result is the Heisenberg algebra.
    TwoStepAlgebra algebra(int q, int max_p = 6) {
        PairBasis basis(q);
        if (basis.size() < 2) return quotient(q, RelationIdeal::zero(q)).algebra;
        int min_dim = std::max(1, basis.size() - max_p);
        return quotient(q, ideal(q, min_dim)).algebra;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline TwoStepAlgebra heisenberg() {
    StructureTensor t(2, 1);
    t.set(1, 2, 1, 1);
    return validate(std::move(t));
}

/// [x1,x2] = y1 on three generators; marginal rank 2 < q.
inline TwoStepAlgebra heisenberg_plus_abelian() {
    StructureTensor t(3, 1);
    t.set(1, 2, 1, 1);
    return validate(std::move(t));
}

}  // namespace twostep::test
