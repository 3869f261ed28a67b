#pragma once

#include <cstdint>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"
#include "momst/node_mask.hpp"

namespace momst {

enum class Pruning {
    none,      // one arc copy per cut edge
    cut_star,  // only a minimum complete set of nondominated cut edges
};

// Arc (U, U + {new_node}) of the transition graph, induced by the cut edge
// `preimage` = [interior, new_node] with interior in U.
struct ArcCopy {
    NodeMask head;
    EdgeId preimage;
    NodeId interior;
    NodeId new_node;
    CostVector cost;
};

// Outgoing arcs of transition node `tail`, sorted by (new_node, preimage).
// With Pruning::cut_star every cut edge strictly dominated by another cut edge
// is dropped and, of several cost-equal survivors, only the lowest id is kept.
std::vector<ArcCopy> build_outgoing(const MultiGraph& g, NodeMask tail, Pruning pruning);

struct TransitionGraphSize {
    std::uint64_t nodes = 0;
    std::uint64_t arcs = 0;
};

inline constexpr std::size_t kExplicitGraphMaxNodes = 20;

// Materializes every transition node reachable from {root} and counts nodes
// and arcs. Test-scale only: throws std::invalid_argument above 20 nodes.
TransitionGraphSize explicit_graph(const MultiGraph& g, Pruning pruning);

}  // namespace momst
