#include "twostep/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "twostep/error.hpp"

namespace twostep {

bool GeneratingHypergraph::is_3_uniform() const {
    return std::all_of(edges.begin(), edges.end(),
                       [](const HyperEdge& e) { return e.centers.size() == 1; });
}

GeneratingHypergraph build_hypergraph(const TwoStepAlgebra& alg) {
    const int q = alg.q(), p = alg.p();
    GeneratingHypergraph g{q, p, {}};
    std::vector<bool> covered(static_cast<std::size_t>(p), false);
    for (int i = 1; i <= q; ++i) {
        for (int j = i + 1; j <= q; ++j) {
            HyperEdge e{i, j, {}};
            for (int k = 1; k <= p; ++k) {
                if (!alg.tensor().at(i, j, k).is_zero()) {
                    e.centers.push_back(k);
                    covered[static_cast<std::size_t>(k - 1)] = true;
                }
            }
            if (!e.centers.empty()) g.edges.push_back(std::move(e));
        }
    }
    // Validation guarantees every center vertex lies on a hyperedge.
    for (int k = 1; k <= p; ++k) {
        if (!covered[static_cast<std::size_t>(k - 1)])
            throw InternalError("center vertex y" + std::to_string(k) + " lies on no hyperedge");
    }
    return g;
}

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void merge(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
    std::vector<int> parent;
};

}  // namespace

std::vector<std::vector<HVertex>> components(const GeneratingHypergraph& g) {
    // Vertices 0..q-1 are generators, q..q+p-1 centers.
    UnionFind uf(g.q + g.p);
    for (const HyperEdge& e : g.edges) {
        uf.merge(e.i - 1, e.j - 1);
        for (int k : e.centers) uf.merge(e.i - 1, g.q + k - 1);
    }
    std::vector<std::vector<HVertex>> out;
    std::vector<int> comp_of(static_cast<std::size_t>(g.q + g.p), -1);
    for (int v = 0; v < g.q + g.p; ++v) {
        int root = uf.find(v);
        if (comp_of[static_cast<std::size_t>(root)] < 0) {
            comp_of[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        HVertex vert;
        vert.center = v >= g.q;
        vert.index = vert.center ? v - g.q + 1 : v + 1;
        out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(root)])].push_back(vert);
    }
    return out;
}

GeneratorGraph build_generator_graph(const TwoStepAlgebra& alg) {
    GeneratorGraph g{alg.q(), {}};
    for (const HyperEdge& e : build_hypergraph(alg).edges) g.edges.emplace_back(e.i, e.j);
    return g;
}

std::vector<int> related_sequence(const TwoStepAlgebra& alg) {
    GeneratorGraph g = build_generator_graph(alg);
    std::vector<int> deg(static_cast<std::size_t>(g.q), 0);
    for (auto [i, j] : g.edges) {
        ++deg[static_cast<std::size_t>(i - 1)];
        ++deg[static_cast<std::size_t>(j - 1)];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::vector<int> generator_relation_sequence(const TwoStepAlgebra& alg) {
    GeneratorGraph g = build_generator_graph(alg);
    UnionFind uf(g.q);
    for (auto [i, j] : g.edges) uf.merge(i - 1, j - 1);
    std::vector<int> size_of(static_cast<std::size_t>(g.q), 0);
    for (int v = 0; v < g.q; ++v) ++size_of[static_cast<std::size_t>(uf.find(v))];
    std::vector<int> sizes;
    for (int s : size_of)
        if (s > 0) sizes.push_back(s);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<int> center_related_sequence(const TwoStepAlgebra& alg) {
    GeneratingHypergraph g = build_hypergraph(alg);
    if (!g.is_3_uniform()) throw NotThreeUniform();
    std::vector<int> count(static_cast<std::size_t>(g.p), 0);
    for (const HyperEdge& e : g.edges) ++count[static_cast<std::size_t>(e.centers.front() - 1)];
    std::sort(count.begin(), count.end());
    return count;
}

std::vector<int> weighted_center_related_sequence(const TwoStepAlgebra& alg) {
    GeneratingHypergraph g = build_hypergraph(alg);
    if (!g.is_3_uniform()) throw NotThreeUniform();
    std::vector<int> deg(static_cast<std::size_t>(g.q), 0);
    for (const HyperEdge& e : g.edges) {
        ++deg[static_cast<std::size_t>(e.i - 1)];
        ++deg[static_cast<std::size_t>(e.j - 1)];
    }
    // w(y_k) sums the degrees of both endpoints of every hyperedge at y_k.
    std::vector<int> w(static_cast<std::size_t>(g.p), 0);
    for (const HyperEdge& e : g.edges) {
        w[static_cast<std::size_t>(e.centers.front() - 1)] +=
            deg[static_cast<std::size_t>(e.i - 1)] + deg[static_cast<std::size_t>(e.j - 1)];
    }
    std::sort(w.begin(), w.end());
    return w;
}

std::optional<int> girth(const GeneratorGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.q));
    for (auto [i, j] : g.edges) {
        adj[static_cast<std::size_t>(i - 1)].push_back(j - 1);
        adj[static_cast<std::size_t>(j - 1)].push_back(i - 1);
    }
    int best = -1;
    for (int s = 0; s < g.q; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.q), -1);
        std::vector<int> parent(static_cast<std::size_t>(g.q), -1);
        std::queue<int> queue;
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    // Non-tree edge: closes a cycle through the BFS root.
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

Fingerprint fingerprint(const TwoStepAlgebra& alg) {
    Fingerprint f;
    f.q = alg.q();
    f.p = alg.p();
    f.related = related_sequence(alg);
    f.generator_relation = generator_relation_sequence(alg);
    GeneratingHypergraph g = build_hypergraph(alg);
    f.uniform3 = g.is_3_uniform();
    if (f.uniform3) {
        f.center_related = center_related_sequence(alg);
        f.weighted_center_related = weighted_center_related_sequence(alg);
    }
    f.girth = girth(build_generator_graph(alg));
    return f;
}

std::optional<ComponentBipartition> component_bipartition(const GeneratingHypergraph& g) {
    auto comps = components(g);
    if (comps.size() < 2) return std::nullopt;
    auto max_generator = [](const std::vector<HVertex>& comp) {
        int best = 0;
        for (const HVertex& v : comp)
            if (!v.center) best = std::max(best, v.index);
        return best;
    };
    auto has_center = [](const std::vector<HVertex>& comp) {
        return std::any_of(comp.begin(), comp.end(), [](const HVertex& v) { return v.center; });
    };
    int center_comps = 0;
    for (const auto& comp : comps) center_comps += has_center(comp) ? 1 : 0;
    const std::vector<HVertex>* side_a = nullptr;
    for (const auto& comp : comps) {
        bool eligible = center_comps >= 2 ? has_center(comp) : !has_center(comp);
        if (!eligible) continue;
        if (!side_a || max_generator(comp) > max_generator(*side_a)) side_a = &comp;
    }
    if (!side_a) throw InternalError("component bipartition found no eligible side");
    std::vector<bool> gen_a(static_cast<std::size_t>(g.q) + 1, false);
    std::vector<bool> cen_a(static_cast<std::size_t>(g.p) + 1, false);
    for (const HVertex& v : *side_a) (v.center ? cen_a : gen_a)[static_cast<std::size_t>(v.index)] = true;
    ComponentBipartition out;
    for (int i = 1; i <= g.q; ++i) (gen_a[static_cast<std::size_t>(i)] ? out.generators_a : out.generators_b).push_back(i);
    for (int k = 1; k <= g.p; ++k) (cen_a[static_cast<std::size_t>(k)] ? out.centers_a : out.centers_b).push_back(k);
    return out;
}

std::optional<ComponentSplit> split_by_components(const TwoStepAlgebra& alg) {
    auto part = component_bipartition(build_hypergraph(alg));
    if (!part) return std::nullopt;
    if (part->centers_a.empty() || part->centers_b.empty() || part->generators_a.size() < 2 ||
        part->generators_b.size() < 2)
        return std::nullopt;
    auto build = [&](const std::vector<int>& gens, const std::vector<int>& cens) {
        StructureTensor t(static_cast<int>(gens.size()), static_cast<int>(cens.size()));
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b)
                for (std::size_t c = 0; c < cens.size(); ++c)
                    t.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1, static_cast<int>(c) + 1,
                          alg.tensor().at(gens[a], gens[b], cens[c]));
        return validate(std::move(t));
    };
    ComponentSplit split{part->generators_a, part->centers_a, build(part->generators_a, part->centers_a),
                         build(part->generators_b, part->centers_b)};
    return split;
}

}  // namespace twostep
