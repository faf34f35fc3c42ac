#include "isolation/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace isolation {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph::from_edges: endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph::from_edges: self-loop");
        if (g.adj_[static_cast<std::size_t>(u)].test(v)) continue;
        g.adj_[static_cast<std::size_t>(u)].set(v);
        g.adj_[static_cast<std::size_t>(v)].set(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_) throw std::out_of_range("Graph::has_edge: vertex out of range");
    return adj_[static_cast<std::size_t>(u)].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors: vertex out of range");
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighbors(int v) const {
    VertexSet out = neighbors(v);
    out.set(v);
    return out;
}

int Graph::degree(int v) const { return neighbors(v).count(); }

int Graph::max_degree() const {
    int best = 0;
    for (const auto& row : adj_) best = std::max(best, row.count());
    return best;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw std::invalid_argument("open_neighborhood: set/graph mismatch");
    VertexSet out(g.n());
    s.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = open_neighborhood(g, s);
    out |= s;
    return out;
}

namespace {

SubgraphResult subgraph_on(const Graph& g, const VertexSet& keep) {
    std::vector<int> map = keep.vertices();
    std::vector<int> inverse(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < map.size(); ++i) inverse[static_cast<std::size_t>(map[i])] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < map.size(); ++i) {
        VertexSet row = g.neighbors(map[i]) & keep;
        row.for_each([&](int u) {
            if (u > map[i]) edges.emplace_back(static_cast<int>(i), inverse[static_cast<std::size_t>(u)]);
        });
    }
    return {Graph::from_edges(static_cast<int>(map.size()), edges), std::move(map)};
}

}  // namespace

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw std::invalid_argument("induced_subgraph: set/graph mismatch");
    return subgraph_on(g, s);
}

SubgraphResult delete_vertices(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw std::invalid_argument("delete_vertices: set/graph mismatch");
    return subgraph_on(g, s.complement());
}

SubgraphResult delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
    return subgraph_on(g, closed_neighborhood(g, s).complement());
}

UnionResult disjoint_union(std::span<const Graph> parts) {
    int total = 0;
    std::vector<int> offsets;
    offsets.reserve(parts.size());
    for (const Graph& part : parts) {
        offsets.push_back(total);
        total += part.n();
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const Graph& part = parts[p];
        for (int v = 0; v < part.n(); ++v) {
            part.neighbors(v).for_each([&](int u) {
                if (u > v) edges.emplace_back(offsets[p] + v, offsets[p] + u);
            });
        }
    }
    return {Graph::from_edges(total, edges), std::move(offsets)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> components;
    VertexSet seen(g.n());
    for (int start = 0; start < g.n(); ++start) {
        if (seen.test(start)) continue;
        VertexSet comp(g.n());
        comp.set(start);
        // frontier expansion over adjacency rows
        while (true) {
            VertexSet grown = comp;
            comp.for_each([&](int v) { grown |= g.neighbors(v); });
            if (grown == comp) break;
            comp = grown;
        }
        components.push_back(comp);
        seen |= comp;
    }
    return components;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return connected_components(g).size() == 1;
}

}  // namespace isolation
