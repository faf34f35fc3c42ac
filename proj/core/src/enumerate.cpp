#include "isolation/enumerate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace isolation {

int edge_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 0) throw std::invalid_argument("edge_index: not an edge");
    return j * (j - 1) / 2 + i;
}

std::pair<int, int> edge_from_index(int idx) {
    if (idx < 0) throw std::invalid_argument("edge_from_index: negative index");
    int j = 1;
    while (j * (j + 1) / 2 <= idx) ++j;
    return {idx - j * (j - 1) / 2, j};
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, bool connected_only, int cap)
    : n_(n), connected_only_(connected_only) {
    if (n < 0) throw std::invalid_argument("LabeledGraphEnumerator: negative n");
    if (n > cap) throw CapExceededError("LabeledGraphEnumerator: n exceeds cap");
    if (n > 11) throw CapExceededError("LabeledGraphEnumerator: edge mask limited to 64 bits (n <= 11)");
    int bits = n * (n - 1) / 2;
    end_ = std::uint64_t{1} << bits;
}

Graph LabeledGraphEnumerator::from_mask(std::uint64_t mask) const {
    std::vector<std::pair<int, int>> edges;
    for (int idx = 0; mask != 0; ++idx, mask >>= 1)
        if (mask & 1) edges.push_back(edge_from_index(idx));
    return Graph::from_edges(n_, edges);
}

std::optional<Graph> LabeledGraphEnumerator::next() {
    while (next_ < end_) {
        Graph g = from_mask(next_++);
        if (!connected_only_ || is_connected(g)) return g;
    }
    return std::nullopt;
}

}  // namespace isolation
