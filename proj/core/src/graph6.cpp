#include "isolation/graph6.hpp"

#include <utility>
#include <vector>

namespace isolation {

namespace {
constexpr int kBias = 63;
constexpr int kMaxShortN = 62;

// Upper-triangle bit positions run column-major: (0,1), (0,2), (1,2), ...
long long triangle_bits(int n) { return static_cast<long long>(n) * (n - 1) / 2; }
}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("graph6: empty line");

    for (char c : line) {
        unsigned char b = static_cast<unsigned char>(c);
        if (b < kBias || b > 126) throw Graph6Error("graph6: byte out of range 63..126");
    }
    if (static_cast<unsigned char>(line[0]) == 126)
        throw Graph6Error("graph6: long-form size header not supported (n > 62)");

    int n = static_cast<unsigned char>(line[0]) - kBias;
    long long bits = triangle_bits(n);
    long long expected = 1 + (bits + 5) / 6;
    if (static_cast<long long>(line.size()) < expected) throw Graph6Error("graph6: line too short");
    if (static_cast<long long>(line.size()) > expected) throw Graph6Error("graph6: trailing garbage");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = static_cast<unsigned char>(line[static_cast<std::size_t>(1 + bit / 6)]) - kBias;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    if (g.n() > kMaxShortN)
        throw CapExceededError("graph6: only the short header (n <= 62) is supported");

    std::string out;
    out.push_back(static_cast<char>(kBias + g.n()));

    int accum = 0;
    int filled = 0;
    for (int col = 1; col < g.n(); ++col) {
        for (int row = 0; row < col; ++row) {
            accum = (accum << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + accum));
                accum = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (accum << (6 - filled))));
    return out;
}

}  // namespace isolation
