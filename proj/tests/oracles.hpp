// Brute-force reference implementations used only by the tests. They work
// straight off Graph::has_edge with index vectors, deliberately sharing no
// machinery with the solver engine they cross-check.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isolation/graph.hpp"

namespace oracle {

// Visits all c-subsets of 0..n-1 in lexicographic order; fn returns false
// to stop early. Returns true if fn stopped the scan.
template <class F>
bool for_each_combination(int n, int c, F&& fn) {
    std::vector<int> pick(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (c > n) return false;
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(pick))) return true;
        int i = c - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - c + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline bool pairwise_adjacent(const isolation::Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

inline bool pairwise_nonadjacent(const isolation::Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// k-subset scan for a clique, restricted to vertices marked alive.
inline bool has_clique_among(const isolation::Graph& g, const std::vector<char>& alive, int k) {
    std::vector<int> live;
    for (int v = 0; v < g.n(); ++v)
        if (alive[static_cast<std::size_t>(v)]) live.push_back(v);
    if (k > static_cast<int>(live.size())) return false;
    bool found = false;
    for_each_combination(static_cast<int>(live.size()), k, [&](const std::vector<int>& idx) {
        std::vector<int> vs;
        for (int i : idx) vs.push_back(live[static_cast<std::size_t>(i)]);
        if (pairwise_adjacent(g, vs)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

inline bool contains_clique(const isolation::Graph& g, int k) {
    return has_clique_among(g, std::vector<char>(static_cast<std::size_t>(g.n()), 1), k);
}

inline bool is_isolating(const isolation::Graph& g, int k, const std::vector<int>& s) {
    std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
    for (int v : s) {
        alive[static_cast<std::size_t>(v)] = 0;
        for (int u = 0; u < g.n(); ++u)
            if (g.has_edge(v, u)) alive[static_cast<std::size_t>(u)] = 0;
    }
    return !has_clique_among(g, alive, k);
}

struct Solution {
    int value = 0;
    std::vector<int> witness;  // lexicographically least minimum set
};

// Reference iota_k / iota'_k: increasing cardinality, lexicographic subsets.
inline Solution solve(const isolation::Graph& g, int k, bool independent) {
    for (int c = 0; c <= g.n(); ++c) {
        std::optional<std::vector<int>> hit;
        for_each_combination(g.n(), c, [&](const std::vector<int>& s) {
            if (independent && !pairwise_nonadjacent(g, s)) return true;
            if (is_isolating(g, k, s)) {
                hit = s;
                return false;
            }
            return true;
        });
        if (hit) return {c, *hit};
    }
    return {g.n(), {}};
}

// Reference domination number (no independence requirement).
inline Solution gamma(const isolation::Graph& g) { return solve(g, 1, false); }

// Reference independence number with lexicographically least maximum witness.
inline Solution alpha(const isolation::Graph& g) {
    for (int c = g.n(); c >= 0; --c) {
        std::optional<std::vector<int>> hit;
        for_each_combination(g.n(), c, [&](const std::vector<int>& s) {
            if (pairwise_nonadjacent(g, s)) {
                hit = s;
                return false;
            }
            return true;
        });
        if (hit) return {c, *hit};
    }
    return {0, {}};
}

// Union-find connectivity, independent of the library's BFS-style expansion.
inline bool connected(const isolation::Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) parent[static_cast<std::size_t>(find(u))] = find(v);
    int root = find(0);
    for (int v = 1; v < g.n(); ++v)
        if (find(v) != root) return false;
    return true;
}

// Convenience builders for the classic fixtures.
inline isolation::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return isolation::Graph::from_edges(n, edges);
}

inline isolation::Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return isolation::Graph::from_edges(n, edges);
}

inline isolation::Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return isolation::Graph::from_edges(n, edges);
}

inline isolation::Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return isolation::Graph::from_edges(leaves + 1, edges);
}

inline isolation::Graph edgeless(int n) { return isolation::Graph(n); }

}  // namespace oracle
