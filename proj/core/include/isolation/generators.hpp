#pragma once

#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

/// A generated extremal instance with its labeled structure map. Vertex
/// numbering is deterministic: centers first, then clique blocks in
/// (copy, i, i', within-block) order, then path-internal vertices.
struct LabeledExtremal {
    Graph graph;
    std::string family;  // "gts", "tilde" or "hat"
    int t = 0;
    int s = 0;
    int k = 0;
    int copies = 1;
    int path_len = 0;  // 0 when no connecting paths

    std::vector<std::vector<int>> centers;  // centers[copy][i-1] = vertex of x_i
    // block_first[copy][i-1][i'-1] = first vertex of clique block (i, i');
    // the block occupies k consecutive indices and its first vertex is the
    // attachment vertex y_{i,i'}.
    std::vector<std::vector<std::vector<int>>> block_first;
    std::vector<int> path_internal;

    long long target_iota = 0;
    long long target_iota_prime = 0;

    int vertices_per_copy() const { return t + t * s * k; }
    int attachment(int copy, int i, int ip) const;  // y_{i,i'}; i, i' are 1-based
    std::vector<int> block(int copy, int i, int ip) const;
};

/// t mutually adjacent centers, each joined to one vertex of each of its s
/// private k-cliques. Requires s + t - 1 >= k.
LabeledExtremal gen_gts(int t, int s, int k);

/// ell disjoint copies of gen_gts(t, t^2 - t + 1, k). Requires t^2 >= k.
LabeledExtremal gen_tilde(int t, int ell, int k);

/// The connected variant: tilde copies chained by paths of length
/// path_len (>= 4) between consecutive copies. Requires k >= 3, ell >= 2.
LabeledExtremal gen_hat(int t, int ell, int k, int path_len = 4);

}  // namespace isolation
