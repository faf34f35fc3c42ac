#include "isolation/generators.hpp"

#include <stdexcept>
#include <utility>

namespace isolation {

int LabeledExtremal::attachment(int copy, int i, int ip) const {
    return block_first.at(static_cast<std::size_t>(copy))
        .at(static_cast<std::size_t>(i - 1))
        .at(static_cast<std::size_t>(ip - 1));
}

std::vector<int> LabeledExtremal::block(int copy, int i, int ip) const {
    int start = attachment(copy, i, ip);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int v = start; v < start + k; ++v) out.push_back(v);
    return out;
}

namespace {

// Core assembler shared by all three families.
LabeledExtremal assemble(int t, int s, int k, int copies, int path_len) {
    LabeledExtremal x;
    x.t = t;
    x.s = s;
    x.k = k;
    x.copies = copies;
    x.path_len = path_len;

    const int per_copy = t + t * s * k;
    const int path_count = path_len > 0 ? copies - 1 : 0;
    const int n = copies * per_copy + path_count * (path_len - 1);

    std::vector<std::pair<int, int>> edges;
    x.centers.resize(static_cast<std::size_t>(copies));
    x.block_first.resize(static_cast<std::size_t>(copies));

    for (int c = 0; c < copies; ++c) {
        const int base = c * per_copy;
        auto& centers = x.centers[static_cast<std::size_t>(c)];
        for (int i = 0; i < t; ++i) centers.push_back(base + i);
        // centers form a clique
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) edges.emplace_back(centers[static_cast<std::size_t>(i)], centers[static_cast<std::size_t>(j)]);

        auto& firsts = x.block_first[static_cast<std::size_t>(c)];
        firsts.resize(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) {
            for (int ip = 0; ip < s; ++ip) {
                const int start = base + t + (i * s + ip) * k;
                firsts[static_cast<std::size_t>(i)].push_back(start);
                for (int u = 0; u < k; ++u)
                    for (int v = u + 1; v < k; ++v) edges.emplace_back(start + u, start + v);
                // x_i is joined to the block's first vertex y_{i,i'}
                edges.emplace_back(centers[static_cast<std::size_t>(i)], start);
            }
        }
    }

    // chain consecutive copies: last vertex of block (t, s) of copy j to the
    // last vertex of block (1, 1) of copy j+1, through path_len - 1 internal
    // vertices. Non-attachment endpoints keep the maximum degree at the centers.
    int next_internal = copies * per_copy;
    for (int j = 0; j + 1 < copies && path_len > 0; ++j) {
        int a = x.block_first[static_cast<std::size_t>(j)].back().back() + k - 1;
        int b = x.block_first[static_cast<std::size_t>(j) + 1].front().front() + k - 1;
        int prev = a;
        for (int step = 0; step < path_len - 1; ++step) {
            x.path_internal.push_back(next_internal);
            edges.emplace_back(prev, next_internal);
            prev = next_internal++;
        }
        edges.emplace_back(prev, b);
    }

    x.graph = Graph::from_edges(n, edges);
    return x;
}

}  // namespace

LabeledExtremal gen_gts(int t, int s, int k) {
    if (t < 1 || s < 1 || k < 1) throw std::invalid_argument("gen_gts: t, s, k must be positive");
    if (s + t - 1 < k) throw std::invalid_argument("gen_gts: requires s + t - 1 >= k");
    LabeledExtremal x = assemble(t, s, k, 1, 0);
    x.family = "gts";
    x.target_iota = t;
    x.target_iota_prime = static_cast<long long>(s) * (t - 1) + 1;
    return x;
}

LabeledExtremal gen_tilde(int t, int ell, int k) {
    if (t < 1 || ell < 1 || k < 1)
        throw std::invalid_argument("gen_tilde: t, ell, k must be positive");
    if (t * t < k) throw std::invalid_argument("gen_tilde: requires t^2 >= k");
    LabeledExtremal x = assemble(t, t * t - t + 1, k, ell, 0);
    x.family = "tilde";
    x.target_iota = static_cast<long long>(t) * ell;
    x.target_iota_prime =
        (static_cast<long long>(t) * t * t - 2ll * t * t + 2ll * t) * ell;
    return x;
}

LabeledExtremal gen_hat(int t, int ell, int k, int path_len) {
    if (t < 1) throw std::invalid_argument("gen_hat: t must be positive");
    if (k < 3) throw std::invalid_argument("gen_hat: requires k >= 3");
    if (ell < 2) throw std::invalid_argument("gen_hat: requires ell >= 2");
    if (path_len < 4) throw std::invalid_argument("gen_hat: requires path length >= 4");
    if (t * t < k) throw std::invalid_argument("gen_hat: requires t^2 >= k");
    LabeledExtremal x = assemble(t, t * t - t + 1, k, ell, path_len);
    x.family = "hat";
    x.target_iota = static_cast<long long>(t) * ell;
    x.target_iota_prime =
        (static_cast<long long>(t) * t * t - 2ll * t * t + 2ll * t) * ell;
    return x;
}

}  // namespace isolation
