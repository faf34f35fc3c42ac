#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "isolation/errors.hpp"
#include "isolation/graph.hpp"

namespace isolation {

/// Index of edge {i, j} (i < j) in the column-major upper-triangle order
/// shared with the graph6 encoding: (0,1), (0,2), (1,2), (0,3), ...
int edge_index(int i, int j);
std::pair<int, int> edge_from_index(int idx);

/// Streams all 2^(n(n-1)/2) labeled simple graphs on n vertices exactly
/// once, in ascending edge-mask order, optionally filtered to connected
/// graphs. The cap keeps exhaustive runs at desk scale.
class LabeledGraphEnumerator {
public:
    static constexpr int kDefaultCap = 7;

    explicit LabeledGraphEnumerator(int n, bool connected_only = false, int cap = kDefaultCap);

    std::optional<Graph> next();

    std::uint64_t total_masks() const { return end_; }

private:
    Graph from_mask(std::uint64_t mask) const;

    int n_;
    bool connected_only_;
    std::uint64_t next_ = 0;
    std::uint64_t end_;
};

}  // namespace isolation
