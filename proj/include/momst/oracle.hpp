#pragma once

#include <cstdint>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"

namespace momst {

struct TreeSet {
    std::vector<std::vector<EdgeId>> trees;
    std::vector<CostVector> costs;
};

inline constexpr std::uint64_t kOracleMaxSubsets = 10'000'000;

// Every spanning tree, found by testing all (n-1)-edge subsets. Throws
// std::invalid_argument when C(m, n-1) exceeds kOracleMaxSubsets.
TreeSet enumerate_spanning_trees(const MultiGraph& g);

// Distinct nondominated members of `costs`, sorted lexicographically.
std::vector<CostVector> pareto_filter(std::vector<CostVector> costs);

// pareto_filter over every spanning tree's cost.
std::vector<CostVector> oracle_frontier(const MultiGraph& g);

}  // namespace momst
