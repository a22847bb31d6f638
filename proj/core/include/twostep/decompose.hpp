#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twostep/polynomial.hpp"
#include "twostep/tensor.hpp"

namespace twostep {

/// A basis change together with the index split it block-diagonalizes: after
/// applying `change`, every tensor entry outside S x S x T and its complement
/// block is zero. S is a nonempty proper subset of the new generator indices.
struct BlockDiagonalWitness {
    std::vector<int> s_subset;  ///< 1-based new generator indices, ascending
    std::vector<int> t_subset;  ///< 1-based new center indices, may be empty or full
    BasisChange change;
};

/// Whether the witness's basis change really confines the tensor to the two
/// blocks. Every returned witness in this module satisfies it; exposed for
/// tests and for verifying untrusted witnesses.
bool block_format_holds(const StructureTensor& t, const BlockDiagonalWitness& w);

/// One point of the projective pencil [alpha : beta] -> alpha*A + beta*B at
/// which the rank falls below the generic rank. Affine points are roots of
/// `modulus` (so one entry may cover several conjugate points); the pure-B
/// direction is the point at infinity.
struct PencilDropPoint {
    std::optional<RatPoly> modulus;  ///< absent = point at infinity
    int rank = 0;
    int multiplicity = 1;  ///< number of distinct pencil points covered
    bool modulus_irreducible = true;
};

struct PencilReport {
    int generic_rank = 0;
    std::vector<PencilDropPoint> drop_points;
    /// Sum of the two smallest ranks attained at distinct projective points,
    /// generic points included. Exceeding q certifies indecomposability.
    int min_pair_sum = 0;
};

struct MarginalRankCertificate {
    int marginal_rank = 0;
    int q = 0;
};

enum class Decomposability { Decomposable, Indecomposable, Inconclusive };

struct DecomposabilityVerdict {
    Decomposability status = Decomposability::Inconclusive;
    std::optional<BlockDiagonalWitness> witness;        ///< present for Decomposable
    std::optional<PencilReport> pencil;                 ///< certificate for the p = 2 criterion
    std::optional<MarginalRankCertificate> marginal;    ///< certificate for the trivial split
    std::string notes;
};

/// Identity-basis witness read off a disconnected generating hypergraph.
/// Absence proves nothing: connectivity is basis-dependent.
std::optional<BlockDiagonalWitness> hypergraph_witness(const TwoStepAlgebra& alg);

/// Rank of [A_1 ... A_p]; basis-invariant. Below q it certifies a split into
/// a smaller algebra plus abelian generators.
int marginal_rank(const TwoStepAlgebra& alg);

struct TrivialSplit {
    TwoStepAlgebra summand;  ///< the s-generator nonabelian part
    int abelian_count = 0;   ///< q - s discarded abelian generators
    BlockDiagonalWitness witness;
};

/// Constructive split when marginal rank s < q; absent at full marginal rank.
std::optional<TrivialSplit> trivial_split(const TwoStepAlgebra& alg);

/// Exact rank analysis of the slice pencil for p = 2 algebras with full
/// marginal rank: generic rank from q+2 exact sample points (enough to pin
/// the rank of a degree <= q pencil), the rank-drop locus as the gcd of all
/// generic-rank-sized minor determinants, exact ranks at every drop point
/// (rational roots directly, irrational ones over Q[t]/(m)), and the point at
/// infinity.
PencilReport pencil_analyze(const TwoStepAlgebra& alg);

/// Decision pipeline: hypergraph witness, then trivial split, then the p = 2
/// pencil criterion; Inconclusive otherwise (no general criterion exists for
/// p >= 3 with full marginal rank).
DecomposabilityVerdict decide(const TwoStepAlgebra& alg);

struct OracleOptions {
    int budget = 32;       ///< randomized attempts; also bounds coefficient height
    std::uint64_t seed = 0;
};

struct OracleResult {
    std::optional<BlockDiagonalWitness> witness;
    int trials_used = 0;
    std::uint64_t seed = 0;
    std::string notes;
};

/// Budgeted search for a decomposing basis change, independent of decide():
/// looks for a proper idempotent in the algebra of pairs (P, Q) with
/// P^T A_k = A_k P = sum_m Q[k][m] A_m, seeded and deterministic. Every
/// returned witness is verified exactly via apply_basis_change; absence is
/// consistent with (but no proof of) indecomposability.
OracleResult brute_force_oracle(const TwoStepAlgebra& alg, const OracleOptions& options);

}  // namespace twostep
