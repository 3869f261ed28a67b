#include <doctest.h>

#include "momst/igmda.hpp"
#include "momst/oracle.hpp"
#include "momst/preprocess.hpp"
#include "support.hpp"

using namespace momst;

TEST_CASE("red edges") {
    const MultiGraph g = momst::testing::triangle();
    CHECK(is_red(g, EdgeId{0}));
    CHECK_FALSE(is_red(g, EdgeId{1}));
    CHECK_FALSE(is_red(g, EdgeId{2}));
    // No efficient tree of the triangle uses [s,u].
    const TreeSet all = enumerate_spanning_trees(g);
    const auto front = pareto_filter(all.costs);
    for (std::size_t i = 0; i < all.trees.size(); ++i) {
        const bool efficient = std::find(front.begin(), front.end(), all.costs[i]) != front.end();
        const bool uses_su = std::find(all.trees[i].begin(), all.trees[i].end(), EdgeId{0}) != all.trees[i].end();
        CHECK_FALSE((efficient && uses_su));
    }

    MultiGraph bridge(2, 2);
    bridge.add_edge(0, 1, {5, 5});
    CHECK_FALSE(is_red(bridge, EdgeId{0}));

    const MultiGraph equal = momst::testing::complete_graph(3, {1, 1});
    for (std::uint32_t e = 0; e < 3; ++e) CHECK_FALSE(is_red(equal, EdgeId{e}));
}

TEST_CASE("blue edges") {
    MultiGraph bridge(3, 2);
    bridge.add_edge(0, 1, {9, 9});
    bridge.add_edge(1, 2, {0, 1});
    bridge.add_edge(1, 2, {1, 0});
    CHECK(is_blue(bridge, EdgeId{0}));
    CHECK_FALSE(is_blue(bridge, EdgeId{1}));

    const MultiGraph g = momst::testing::triangle();
    CHECK(is_blue(g, EdgeId{1}));
    CHECK(oracle_frontier(g) == std::vector<CostVector>{{3, 2}});

    // All costs equal: every other edge is dominated-or-equaled, so the filter
    // removes both and the endpoints separate.
    const MultiGraph equal = momst::testing::complete_graph(3, {1, 1});
    for (std::uint32_t e = 0; e < 3; ++e) CHECK(is_blue(equal, EdgeId{e}));
    CHECK(oracle_frontier(equal) == std::vector<CostVector>{{2, 2}});
}

TEST_CASE("triangle reduces to a single node") {
    const MultiGraph g = momst::testing::triangle();
    const Reduction r = reduce(g);
    CHECK(r.reduced_graph.node_count() == 1);
    CHECK(r.reduced_graph.edge_count() == 0);
    CHECK(r.blue_edges == std::vector<EdgeId>{EdgeId{1}, EdgeId{2}});
    CHECK(r.blue_offset == CostVector{3, 2});
    CHECK(r.red_count == 1);
    CHECK(r.blue_count == 2);
    CHECK(lift(r, {}) == std::vector<EdgeId>{EdgeId{1}, EdgeId{2}});
}

TEST_CASE("a tree is all blue") {
    MultiGraph path(4, 2, 1);
    path.add_edge(0, 1, {1, 2});
    path.add_edge(1, 2, {3, 4});
    path.add_edge(2, 3, {5, 6});
    const Reduction r = reduce(path);
    CHECK(r.reduced_graph.node_count() == 1);
    CHECK(r.blue_count == 3);
    CHECK(r.blue_offset == CostVector{9, 12});
    CHECK(lift(r, {}).size() == 3);
}

TEST_CASE("incomparable costs leave the graph alone") {
    MultiGraph g(3, 2);
    g.add_edge(0, 1, {1, 4});
    g.add_edge(1, 2, {2, 3});
    g.add_edge(0, 2, {3, 2});
    g.add_edge(0, 2, {4, 1});
    const Reduction r = reduce(g);
    CHECK(r.red_count == 0);
    CHECK(r.blue_count == 0);
    CHECK(r.reduced_graph.edge_count() == 4);
    CHECK(r.node_map == std::vector<NodeId>{0, 1, 2});
    const std::vector<EdgeId> reduced_tree{EdgeId{0}, EdgeId{3}};
    CHECK(lift(r, reduced_tree) == reduced_tree);
}

TEST_CASE("identity reduction") {
    const MultiGraph g = momst::testing::triangle();
    const Reduction r = identity_reduction(g);
    CHECK(r.reduced_graph.edge_count() == 3);
    CHECK(r.edge_map == std::vector<EdgeId>{EdgeId{0}, EdgeId{1}, EdgeId{2}});
    CHECK(r.blue_offset == CostVector{0, 0});
    CHECK(lift(r, std::vector<EdgeId>{EdgeId{2}}) == std::vector<EdgeId>{EdgeId{2}});
    CHECK_THROWS_AS(lift(r, std::vector<EdgeId>{EdgeId{7}}), std::out_of_range);
}

TEST_CASE("reduction is sound and idempotent") {
    for (const InstanceSpec& spec : momst::testing::fuzz_suite(120)) {
        CAPTURE(instance_id(spec));
        const MultiGraph g = generate(spec);
        const Reduction r = reduce(g);
        std::vector<CostVector> shifted;
        for (const CostVector& c : oracle_frontier(r.reduced_graph)) shifted.push_back(c + r.blue_offset);
        CHECK(pareto_filter(shifted) == oracle_frontier(g));

        const Reduction again = reduce(r.reduced_graph);
        CHECK(again.red_count == 0);
        CHECK(again.blue_count == 0);

        for (const Solution& s : solve_igmda(r.reduced_graph).solutions) {
            const auto tree = lift(r, s.edges);
            CHECK(is_spanning_tree(g, tree));
            CHECK(total_cost(g, tree) == s.cost + r.blue_offset);
        }
    }
}
