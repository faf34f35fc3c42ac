#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "isolation/errors.hpp"
#include "isolation/graph.hpp"

namespace isolation {

struct SolverConfig {
    /// Hard cap on the vertex count accepted by the exact solvers.
    int n_cap = 30;
    /// Independent dominating subproblems up to this size are solved
    /// exactly; larger ones fall back to the greedy rule.
    int b_exact_threshold = 20;
    /// Testing hook: route graphs through the multi-word engine even when
    /// a single word would do.
    bool force_wide_masks = false;
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t explored = 0;  // candidate sets examined
};

/// True iff G has k pairwise-adjacent vertices. k = 1 means "any vertex".
bool contains_clique(const Graph& g, int k);

/// Lexicographically-first k-clique, if any.
std::optional<VertexSet> find_clique(const Graph& g, int k);

/// True iff G - N[S] has no K_k.
bool is_isolating(const Graph& g, int k, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);

/// iota_k(G): minimum K_k-isolating set, by increasing cardinality with
/// c-subsets enumerated lexicographically; the witness is the
/// lexicographically least minimum set. Components are solved separately
/// and recombined.
SolveResult isolation_number(const Graph& g, int k, const SolverConfig& cfg = {});

/// iota'_k(G): same search restricted to independent sets.
SolveResult independent_isolation_number(const Graph& g, int k, const SolverConfig& cfg = {});

/// i(G): smallest independent dominating set. Plain lexicographic
/// combination scan, deliberately separate from the isolation engine so
/// the two can cross-check each other (i = iota'_1).
SolveResult min_independent_dominating_set(const Graph& g, const SolverConfig& cfg = {});

/// Maximal independent set from the least-index greedy rule; always
/// dominating.
VertexSet greedy_maximal_independent_set(const Graph& g);

/// Maximum independent set, lexicographically least among the maximum ones.
VertexSet max_independent_set(const Graph& g, const SolverConfig& cfg = {});

/// Least r >= 3 such that G is K_{1,r}-free for all r' >= r, computed as
/// max(3, 1 + max_v alpha(G[N(v)])).
int star_free_threshold(const Graph& g);

/// Calls fn for every minimum K_k-isolating set in lexicographic order
/// until fn returns false. Backs the exhaustive certificate mode.
void for_each_minimum_isolating_set(const Graph& g, int k, const SolverConfig& cfg,
                                    const std::function<bool(const VertexSet&)>& fn);

}  // namespace isolation
