#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"

namespace momst {

// Red by the cycle rule: the endpoints of e stay connected using only edges
// whose cost strictly dominates c(e), so e can be swapped out of any tree
// for a strictly better one.
bool is_red(const MultiGraph& g, EdgeId e);

// Blue by the cut rule: removing e and every edge f with c(e) <= c(f)
// disconnects its endpoints, so e can be swapped into any efficient tree at
// no loss.
bool is_blue(const MultiGraph& g, EdgeId e);

/// Result of deleting red edges and contracting blue edges until neither
/// rule fires.
struct Reduction {
    MultiGraph reduced_graph;
    std::vector<NodeId> node_map;   // original node -> reduced node
    std::vector<EdgeId> edge_map;   // reduced edge -> original edge
    std::vector<EdgeId> blue_edges; // original ids, ascending; part of every output tree
    CostVector blue_offset;         // sum of blue edge costs
    std::size_t red_count = 0;
    std::size_t blue_count = 0;
};

Reduction reduce(const MultiGraph& g);

// No-op reduction: same graph, identity maps.
Reduction identity_reduction(const MultiGraph& g);

// Maps a spanning tree of the reduced graph back to the original graph and
// adds the blue edges. Throws std::out_of_range for ids outside edge_map.
std::vector<EdgeId> lift(const Reduction& r, std::span<const EdgeId> reduced_tree);

}  // namespace momst
