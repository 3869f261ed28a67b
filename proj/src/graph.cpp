#include "momst/graph.hpp"

#include <stdexcept>
#include <string>

#include "momst/disjoint_sets.hpp"
#include "momst/errors.hpp"

namespace momst {

const char* to_string(InstanceErrorKind kind) noexcept {
    switch (kind) {
    case InstanceErrorKind::syntax: return "syntax";
    case InstanceErrorKind::disconnected: return "disconnected";
    case InstanceErrorKind::unsupported_size: return "unsupported_size";
    case InstanceErrorKind::negative_cost: return "negative_cost";
    case InstanceErrorKind::invalid_spec: return "invalid_spec";
    }
    return "unknown";
}

InstanceError::InstanceError(InstanceErrorKind kind, const std::string& what, std::size_t line,
                             std::size_t column)
    : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

MultiGraph::MultiGraph(std::size_t node_count, std::size_t dimension, NodeId root)
    : dim_(dimension), root_(root), adjacency_(node_count) {
    if (node_count == 0 || node_count > kMaxNodes)
        throw InstanceError(InstanceErrorKind::unsupported_size,
                            "node count must be in [1, 64], got " + std::to_string(node_count));
    if (dimension == 0 || dimension > kMaxDimension)
        throw InstanceError(InstanceErrorKind::unsupported_size,
                            "cost dimension must be in [1, 8], got " + std::to_string(dimension));
    if (root >= node_count)
        throw InstanceError(InstanceErrorKind::invalid_spec, "root out of range");
}

EdgeId MultiGraph::add_edge(NodeId u, NodeId v, CostVector cost) {
    if (u >= node_count() || v >= node_count())
        throw InstanceError(InstanceErrorKind::invalid_spec, "edge endpoint out of range");
    if (u == v) throw InstanceError(InstanceErrorKind::invalid_spec, "self-loop");
    if (cost.size() != dim_)
        throw InstanceError(InstanceErrorKind::invalid_spec, "edge cost dimension mismatch");
    for (Cost c : cost)
        if (c < 0) throw InstanceError(InstanceErrorKind::negative_cost, "negative edge cost");

    const EdgeId id(static_cast<std::uint32_t>(edges_.size()));
    edges_.push_back({u, v, cost});
    adjacency_[u].push_back(id);
    adjacency_[v].push_back(id);
    return id;
}

bool MultiGraph::is_connected() const {
    DisjointSets sets(node_count());
    for (const Edge& e : edges_) sets.unite(e.u, e.v);
    return sets.set_count() == 1;
}

void MultiGraph::require_connected() const {
    if (!is_connected()) throw InstanceError(InstanceErrorKind::disconnected, "graph is not connected");
}

std::vector<EdgeId> cut(const MultiGraph& g, NodeMask inside) {
    if (inside.empty() || inside == g.all_nodes())
        throw std::invalid_argument("cut of an empty or full node set");
    std::vector<EdgeId> out;
    const auto edges = g.edges();
    for (std::uint32_t i = 0; i < edges.size(); ++i)
        if (inside.contains(edges[i].u) != inside.contains(edges[i].v)) out.emplace_back(i);
    return out;
}

CostVector total_cost(const MultiGraph& g, std::span<const EdgeId> edges) {
    CostVector sum(g.dimension());
    for (EdgeId e : edges) sum += g.edge(e).cost;
    return sum;
}

bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> edges) {
    if (edges.size() + 1 != g.node_count()) return false;
    DisjointSets sets(g.node_count());
    for (EdgeId e : edges) {
        if (e.index >= g.edge_count()) return false;
        const Edge& edge = g.edge(e);
        if (!sets.unite(edge.u, edge.v)) return false;
    }
    return sets.set_count() == 1;
}

}  // namespace momst
