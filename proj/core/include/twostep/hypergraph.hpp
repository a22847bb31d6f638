#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twostep/tensor.hpp"

namespace twostep {

/// One hyperedge per unordered generator pair with a nonzero bracket: the two
/// generator vertices plus every center vertex appearing in the bracket.
struct HyperEdge {
    int i, j;                  ///< generator vertices, i < j
    std::vector<int> centers;  ///< nonempty, ascending
};

/// Bipartite multi-vertex hypergraph on generator and center vertices.
struct GeneratingHypergraph {
    int q = 0, p = 0;
    std::vector<HyperEdge> edges;  ///< ordered by (i, j)

    /// True when every hyperedge touches exactly one center vertex.
    bool is_3_uniform() const;
};

/// Projection of the generating hypergraph onto the generator vertices.
struct GeneratorGraph {
    int q = 0;
    std::vector<std::pair<int, int>> edges;  ///< simple, i < j, ordered
};

/// A vertex of the generating hypergraph: generator x_index or center y_index.
struct HVertex {
    bool center = false;
    int index = 0;

    friend bool operator==(const HVertex& a, const HVertex& b) {
        return a.center == b.center && a.index == b.index;
    }
    friend bool operator<(const HVertex& a, const HVertex& b) {
        if (a.center != b.center) return !a.center;
        return a.index < b.index;
    }
};

GeneratingHypergraph build_hypergraph(const TwoStepAlgebra& alg);

/// Connected components; a hyperedge connects all of its vertices, and
/// isolated generators form singletons. Components are ordered by their
/// smallest vertex, vertices ascending within each (generators before
/// centers).
std::vector<std::vector<HVertex>> components(const GeneratingHypergraph& g);

GeneratorGraph build_generator_graph(const TwoStepAlgebra& alg);

/// Sorted degree sequence of the generator graph (the related sequence of the
/// basis; an isomorphism invariant under the Leger-Luks dimension-one
/// root-space hypotheses).
std::vector<int> related_sequence(const TwoStepAlgebra& alg);

/// Sorted component sizes of the generator graph, isolated vertices counted.
std::vector<int> generator_relation_sequence(const TwoStepAlgebra& alg);

/// Per center vertex, the number of incident hyperedges, sorted. Defined only
/// for 3-uniform hypergraphs; throws NotThreeUniform otherwise.
std::vector<int> center_related_sequence(const TwoStepAlgebra& alg);

/// Per center vertex, the sum of both endpoint degrees over its hyperedges,
/// sorted. Throws NotThreeUniform when not 3-uniform.
std::vector<int> weighted_center_related_sequence(const TwoStepAlgebra& alg);

/// Length of a shortest cycle; absent for forests. BFS from every vertex.
std::optional<int> girth(const GeneratorGraph& g);

/// All computable basis invariants bundled for comparison. Center sequences
/// are present only when the hypergraph is 3-uniform.
struct Fingerprint {
    int q = 0, p = 0;
    std::vector<int> related;
    std::vector<int> generator_relation;
    std::optional<std::vector<int>> center_related;
    std::optional<std::vector<int>> weighted_center_related;
    std::optional<int> girth;
    bool uniform3 = false;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) = default;
};

Fingerprint fingerprint(const TwoStepAlgebra& alg);

/// A bipartition of the vertices induced by a disconnected hypergraph: side A
/// is one component, side B the rest. When at least two components carry
/// center vertices, side A is the center-carrying component with the
/// highest-numbered generator; otherwise it is the highest-numbered abelian
/// component. Absent when the hypergraph is connected.
struct ComponentBipartition {
    std::vector<int> generators_a, centers_a;  ///< ascending, 1-based
    std::vector<int> generators_b, centers_b;
};
std::optional<ComponentBipartition> component_bipartition(const GeneratingHypergraph& g);

/// When the hypergraph splits into two parts that are both genuine two-step
/// algebras (each side keeps at least one center and two generators), the
/// corresponding summands in the original index order.
struct ComponentSplit {
    std::vector<int> generators_a, centers_a;  ///< ascending, 1-based
    TwoStepAlgebra part_a, part_b;
};
std::optional<ComponentSplit> split_by_components(const TwoStepAlgebra& alg);

}  // namespace twostep
