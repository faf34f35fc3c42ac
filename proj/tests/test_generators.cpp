#include <doctest.h>

#include "isolation/certificates.hpp"
#include "isolation/generators.hpp"
#include "isolation/graph6.hpp"
#include "isolation/solver.hpp"
#include "oracles.hpp"

using isolation::Graph;
using isolation::LabeledExtremal;

namespace {

// Edges leaving a clique block (i, i') of the given copy.
int external_edges(const LabeledExtremal& x, int copy, int i, int ip) {
    isolation::VertexSet block(x.graph.n());
    for (int v : x.block(copy, i, ip)) block.set(v);
    return (open_neighborhood(x.graph, block) - block).count();
}

}  // namespace

TEST_CASE("G(t,s) structure") {
    LabeledExtremal x = isolation::gen_gts(2, 3, 2);
    CHECK(x.graph.n() == 14);
    CHECK(x.graph.max_degree() == 4);  // s + t - 1
    CHECK(x.centers == std::vector<std::vector<int>>{{0, 1}});

    for (int center : x.centers[0]) CHECK(x.graph.degree(center) == x.s + x.t - 1);
    CHECK(x.graph.has_edge(0, 1));  // centers form a clique

    for (int i = 1; i <= x.t; ++i) {
        for (int ip = 1; ip <= x.s; ++ip) {
            auto block = x.block(0, i, ip);
            CHECK(static_cast<int>(block.size()) == x.k);
            CHECK(oracle::pairwise_adjacent(x.graph, block));
            // exactly one edge leaves each block: the attachment to x_i
            CHECK(external_edges(x, 0, i, ip) == 1);
            CHECK(x.graph.has_edge(x.centers[0][static_cast<std::size_t>(i - 1)],
                                   x.attachment(0, i, ip)));
        }
    }
}

TEST_CASE("G(t,s) target values are exact") {
    SUBCASE("paper equality instance") {
        LabeledExtremal x = isolation::gen_gts(2, 3, 2);
        CHECK(isolation::isolation_number(x.graph, x.k).value == x.target_iota);
        CHECK(isolation::independent_isolation_number(x.graph, x.k).value == x.target_iota_prime);
    }
    SUBCASE("t = 1 needs a single vertex") {
        LabeledExtremal x = isolation::gen_gts(1, 4, 3);
        CHECK(x.target_iota == 1);
        CHECK(isolation::isolation_number(x.graph, 3).value == 1);
    }
    SUBCASE("k = 1 degenerates blocks to leaves") {
        LabeledExtremal x = isolation::gen_gts(3, 2, 1);
        CHECK(x.graph.n() == 3 + 3 * 2);
        CHECK(isolation::isolation_number(x.graph, 1).value == 3);
        CHECK(isolation::independent_isolation_number(x.graph, 1).value == 2 * 2 + 1);
    }
    SUBCASE("theorem-2 sharpness at s = r - 2") {
        LabeledExtremal x = isolation::gen_gts(2, 2, 2);  // r = 4
        CHECK(isolation::star_free_threshold(x.graph) == 4);
        int prime = isolation::independent_isolation_number(x.graph, 2).value;
        CHECK(prime == isolation::thm2_bound(2, 4));
    }
}

TEST_CASE("G(t,s) preconditions") {
    CHECK_THROWS_AS(isolation::gen_gts(1, 1, 3), std::invalid_argument);  // s + t - 1 < k
    CHECK_THROWS_AS(isolation::gen_gts(0, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(isolation::gen_gts(1, 3, 3));
}

TEST_CASE("tilde: disjoint copies") {
    SUBCASE("a single copy is exactly G(t, t^2-t+1)") {
        CHECK(isolation::emit_graph6(isolation::gen_tilde(2, 1, 2).graph) ==
              isolation::emit_graph6(isolation::gen_gts(2, 3, 2).graph));
    }
    SUBCASE("two copies") {
        LabeledExtremal x = isolation::gen_tilde(2, 2, 2);
        CHECK(x.graph.n() == 28);
        CHECK(connected_components(x.graph).size() == 2);
        CHECK(x.target_iota == 4);
        CHECK(x.target_iota_prime == 8);
        CHECK(x.graph.max_degree() == 4);  // t^2
    }
    CHECK_THROWS_AS(isolation::gen_tilde(1, 2, 2), std::invalid_argument);  // t^2 < k
}

TEST_CASE("hat: path-connected copies") {
    LabeledExtremal x = isolation::gen_hat(2, 2, 3, 4);
    CHECK(x.graph.n() == 43);  // 2 * 20 + 3 path internals
    CHECK(static_cast<int>(x.path_internal.size()) == 3);
    CHECK(is_connected(x.graph));
    CHECK(connected_components(x.graph).size() == 1);
    CHECK(x.graph.max_degree() == 4);  // the paths must not raise the degree
    CHECK(x.target_iota == 4);
    CHECK(x.target_iota_prime == 8);
    for (int v : x.path_internal) CHECK(x.graph.degree(v) == 2);

    SUBCASE("longer paths stay connected") {
        LabeledExtremal longer = isolation::gen_hat(2, 3, 3, 6);
        CHECK(is_connected(longer.graph));
        CHECK(longer.graph.n() == 3 * 20 + 2 * 5);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(isolation::gen_hat(2, 2, 2, 4), std::invalid_argument);  // k < 3
        CHECK_THROWS_AS(isolation::gen_hat(2, 1, 3, 4), std::invalid_argument);  // ell < 2
        CHECK_THROWS_AS(isolation::gen_hat(2, 2, 3, 3), std::invalid_argument);  // short path
    }
}

TEST_CASE("tilde values decompose over components") {
    isolation::SolverConfig cfg;
    LabeledExtremal x = isolation::gen_tilde(2, 2, 2);
    auto iota = isolation::isolation_number(x.graph, 2, cfg);
    auto prime = isolation::independent_isolation_number(x.graph, 2, cfg);
    CHECK(iota.value == x.target_iota);
    CHECK(prime.value == x.target_iota_prime);

    // per-copy values are those of a single G(2,3)
    LabeledExtremal single = isolation::gen_gts(2, 3, 2);
    CHECK(iota.value == 2 * isolation::isolation_number(single.graph, 2).value);
    CHECK(prime.value == 2 * isolation::independent_isolation_number(single.graph, 2).value);
}
