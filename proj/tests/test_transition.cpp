#include <doctest.h>

#include "momst/transition.hpp"
#include "support.hpp"

using namespace momst;

TEST_CASE("dominance triangle outgoing arcs") {
    const MultiGraph g = momst::testing::triangle();

    const auto from_s = build_outgoing(g, NodeMask::single(0), Pruning::none);
    REQUIRE(from_s.size() == 2);
    CHECK(from_s[0].head == NodeMask(0b011));
    CHECK(from_s[0].cost == CostVector{3, 3});
    CHECK(from_s[0].interior == 0);
    CHECK(from_s[0].new_node == 1);
    CHECK(from_s[1].head == NodeMask(0b101));
    CHECK(from_s[1].cost == CostVector{1, 1});

    const auto from_su = build_outgoing(g, NodeMask(0b011), Pruning::none);
    REQUIRE(from_su.size() == 2);
    CHECK(from_su[0].head == g.all_nodes());
    CHECK(from_su[1].head == g.all_nodes());
    CHECK(from_su[0].cost == CostVector{1, 1});
    CHECK(from_su[1].cost == CostVector{2, 1});
    CHECK(from_su[1].interior == 1);
    CHECK(from_su[1].new_node == 2);

    const auto pruned = build_outgoing(g, NodeMask(0b011), Pruning::cut_star);
    REQUIRE(pruned.size() == 1);
    CHECK(pruned[0].cost == CostVector{1, 1});
    CHECK(pruned[0].preimage == EdgeId{1});
}

TEST_CASE("cut_star keeps one edge per nondominated cost class") {
    MultiGraph g(3, 2);
    g.add_edge(0, 1, {2, 2});  // equal to the next one, lower id survives
    g.add_edge(0, 1, {2, 2});
    g.add_edge(0, 2, {1, 3});
    g.add_edge(0, 2, {3, 3});  // dominated by (2,2)
    g.add_edge(1, 2, {0, 0});
    const auto arcs = build_outgoing(g, NodeMask::single(0), Pruning::cut_star);
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0].preimage == EdgeId{0});
    CHECK(arcs[1].preimage == EdgeId{2});
}

TEST_CASE("explicit graph size of complete graphs") {
    for (std::size_t n = 3; n <= 10; ++n) {
        CAPTURE(n);
        const auto size = explicit_graph(momst::testing::complete_graph(n, {1, 2}), Pruning::none);
        CHECK(size.nodes == (std::uint64_t{1} << (n - 1)));
        CHECK(size.arcs == (std::uint64_t{1} << (n - 1)) * n * (n - 1) / 4);
    }
    CHECK(explicit_graph(momst::testing::complete_graph(3, {1, 2}), Pruning::none).arcs == 6);
    CHECK(explicit_graph(momst::testing::complete_graph(5, {1, 2}), Pruning::none).arcs == 80);
}

TEST_CASE("cut_star on equal costs leaves one arc per transition node") {
    const auto size = explicit_graph(momst::testing::complete_graph(4, {1, 1}), Pruning::cut_star);
    CHECK(size.arcs < 24);
    // One arc per node, always toward the lowest-id cut edge: a single chain.
    CHECK(size.nodes == 4);
    CHECK(size.arcs == 3);
}

TEST_CASE("explicit graph refuses large inputs") {
    CHECK_THROWS_AS(explicit_graph(momst::testing::complete_graph(21, {1}), Pruning::none), std::invalid_argument);
}
