#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "momst/cost.hpp"
#include "momst/node_mask.hpp"

namespace momst {

// Stable handle of an edge inside one MultiGraph.
struct EdgeId {
    std::uint32_t index = 0;

    constexpr EdgeId() = default;
    constexpr explicit EdgeId(std::uint32_t i) : index(i) {}

    friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
    NodeId u;
    NodeId v;
    CostVector cost;

    NodeId other(NodeId x) const noexcept { return x == u ? v : u; }
};

/// Undirected multigraph with d-dimensional nonnegative integer edge costs and
/// a designated root. Parallel edges are allowed, self-loops are not.
class MultiGraph {
public:
    MultiGraph(std::size_t node_count, std::size_t dimension, NodeId root = 0);

    // Throws InstanceError on self-loops, out-of-range endpoints, negative
    // components or a dimension mismatch.
    EdgeId add_edge(NodeId u, NodeId v, CostVector cost);

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t dimension() const noexcept { return dim_; }
    NodeId root() const noexcept { return root_; }
    NodeMask all_nodes() const noexcept { return NodeMask::full(node_count()); }

    const Edge& edge(EdgeId e) const { return edges_.at(e.index); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const EdgeId> incident(NodeId v) const { return adjacency_.at(v); }

    bool is_connected() const;

    // Throws InstanceError(disconnected) unless connected.
    void require_connected() const;

private:
    std::size_t dim_;
    NodeId root_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

// Edges with exactly one endpoint in `inside`, ascending by id. Throws
// std::invalid_argument if `inside` is empty or covers every node.
std::vector<EdgeId> cut(const MultiGraph& g, NodeMask inside);

// Componentwise cost sum of an edge set.
CostVector total_cost(const MultiGraph& g, std::span<const EdgeId> edges);

// True iff `edges` has n-1 members, no cycle and touches every node.
bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> edges);

}  // namespace momst
