#pragma once

#include <span>
#include <utility>
#include <vector>

#include "isolation/vertex_set.hpp"

namespace isolation {

/// Immutable simple undirected graph on dense vertices 0..n-1 with
/// adjacency-set rows. Symmetric and irreflexive by construction.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds a graph from unordered pairs. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints throw.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    const VertexSet& neighbors(int v) const;
    VertexSet closed_neighbors(int v) const;
    int degree(int v) const;

    /// Delta(G); 0 for the empty graph.
    int max_degree() const;

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Derived graph together with the map from new indices to original ones.
struct SubgraphResult {
    Graph graph;
    std::vector<int> vertex_map;
};

struct UnionResult {
    Graph graph;
    std::vector<int> offsets;  // offsets[i] = first vertex index of part i
};

/// N_G(S): union of open neighborhoods over S (may intersect S).
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// N_G[S] = N_G(S) ∪ S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Induced subgraph on S.
SubgraphResult induced_subgraph(const Graph& g, const VertexSet& s);

/// G - S.
SubgraphResult delete_vertices(const Graph& g, const VertexSet& s);

/// G - N_G[S].
SubgraphResult delete_closed_neighborhood(const Graph& g, const VertexSet& s);

UnionResult disjoint_union(std::span<const Graph> parts);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace isolation
