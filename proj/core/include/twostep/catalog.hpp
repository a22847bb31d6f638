#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "twostep/free_algebra.hpp"
#include "twostep/hypergraph.hpp"
#include "twostep/tensor.hpp"

namespace twostep {

/// One classified algebra with its literature metadata. Rank values and the
/// root-space flags come from the sources (Ga73, GT99, RZ11, RZ17, RZ17a,
/// WR11, XR10, YD13); they are asserted data, never computed.
struct CatalogEntry {
    std::string id;                       ///< source label, e.g. "N^{8,3}_4"
    TwoStepAlgebra algebra;
    int rank_r = 0;                       ///< maximal-torus dimension, from the literature
    bool root_spaces_all_dim1 = false;    ///< hypothesis for sequence-based distinction
    std::vector<int> hmsg_related_sequence;
    std::string t_name;                   ///< rank-based name, e.g. "T^{8,3}_{4,3}"
    std::string provenance;
};

/// The 26 primary entries: N^{8,2}_{1..5}, N^{8,3}_{1..11}, N^{8,4}_{1..3},
/// N^{9,2}_{1..5}, N^{9,5}_{1..2}. Every entry passes validate().
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& id);  ///< throws UnknownId

/// Rank-first nomenclature: T^{n,p}_r when (n, p, r) is a singleton class,
/// else T^{n,p}_{r,i} with i ordered by: dimension-one root spaces first,
/// then lexicographic H-msg related sequence, generator relation sequence,
/// center related sequence, weighted center related sequence, then girth.
/// Throws UnresolvedTie when two entries agree on every tier.
std::map<std::string, std::string> assign_t_names(std::span<const CatalogEntry> entries);

enum class MatchStrength { Exact, Partial };

struct CatalogMatch {
    const CatalogEntry* entry = nullptr;
    MatchStrength strength = MatchStrength::Partial;
};

/// Catalog entries with the same (q, p) whose computable invariants all agree
/// with the argument's. Exact means the comparison was complete (both sides
/// computed the same set of invariants); Partial means center sequences were
/// withheld on one side by 3-uniformity. A match asserts only "not
/// distinguished by these invariants", never isomorphism.
std::vector<CatalogMatch> match(const TwoStepAlgebra& alg);

struct DistinguishResult {
    bool not_isomorphic = false;
    std::string reason;  ///< first differing invariant, or why inconclusive
};

/// Sound for "not isomorphic" via invariant comparison; inconclusive
/// otherwise. Sequence-based distinctions presume the Leger-Luks
/// dimension-one root-space hypotheses; the caveat is part of the reason.
DistinguishResult distinguish(const TwoStepAlgebra& a, const TwoStepAlgebra& b);

/// Auxiliary fixtures: the relation-ideal families of Ga73 used in the
/// duality worked examples, and the decomposable GT99 instances.
const std::vector<RelationIdeal>& gauger_ideals_q6();        ///< I_1..I_11, Theorem 7.14 of Ga73
const std::vector<RelationIdeal>& gauger_ideals_q4_two();    ///< I_1..I_3, Theorem 7.12 of Ga73
const std::vector<RelationIdeal>& gauger_ideals_q4_one();    ///< I_1..I_2, Theorem 5.2 of Ga73

struct FixtureAlgebra {
    std::string id;
    TwoStepAlgebra algebra;
    std::string provenance;
};

/// GT99 algebras shown decomposable by their hypergraphs: Table 2 No. 91,
/// Table 2 No. 82, Table 8 No. 44.
const std::vector<FixtureAlgebra>& gt99_decomposable_examples();

}  // namespace twostep
