#include <doctest.h>

#include "isolation/enumerate.hpp"
#include "oracles.hpp"

using isolation::LabeledGraphEnumerator;

namespace {

int count_all(int n, bool connected_only) {
    LabeledGraphEnumerator en(n, connected_only);
    int total = 0;
    while (en.next()) ++total;
    return total;
}

}  // namespace

TEST_CASE("labeled graph counts") {
    CHECK(count_all(0, false) == 1);
    CHECK(count_all(2, false) == 2);
    CHECK(count_all(3, false) == 8);
    CHECK(count_all(4, false) == 64);
}

TEST_CASE("connected filter agrees with the union-find oracle") {
    // 38 connected labeled graphs on 4 vertices
    LabeledGraphEnumerator all(4);
    int connected = 0;
    while (auto g = all.next())
        if (oracle::connected(*g)) ++connected;
    CHECK(connected == 38);
    CHECK(count_all(4, true) == 38);
}

TEST_CASE("edge-mask order is stable and complete") {
    LabeledGraphEnumerator en(3);
    CHECK(en.total_masks() == 8);
    auto first = en.next();
    REQUIRE(first.has_value());
    CHECK(first->edge_count() == 0);  // mask 0
    auto second = en.next();
    REQUIRE(second.has_value());
    CHECK(second->has_edge(0, 1));  // mask 1 = lowest-index edge
    CHECK(second->edge_count() == 1);
}

TEST_CASE("edge indexing matches the graph6 bit order") {
    CHECK(isolation::edge_index(0, 1) == 0);
    CHECK(isolation::edge_index(0, 2) == 1);
    CHECK(isolation::edge_index(1, 2) == 2);
    CHECK(isolation::edge_index(2, 3) == 5);
    for (int idx = 0; idx < 21; ++idx) {
        auto [i, j] = isolation::edge_from_index(idx);
        CHECK(isolation::edge_index(i, j) == idx);
    }
}

TEST_CASE("cap is enforced") {
    CHECK_THROWS_AS(LabeledGraphEnumerator(8), isolation::CapExceededError);
    CHECK_NOTHROW(LabeledGraphEnumerator(8, false, 8));
    CHECK_THROWS_AS(LabeledGraphEnumerator(12, false, 20), isolation::CapExceededError);
}
