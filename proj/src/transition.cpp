#include "momst/transition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace momst {

std::vector<ArcCopy> build_outgoing(const MultiGraph& g, NodeMask tail, Pruning pruning) {
    std::vector<EdgeId> crossing = cut(g, tail);

    if (pruning == Pruning::cut_star) {
        std::vector<EdgeId> kept;
        kept.reserve(crossing.size());
        for (EdgeId e : crossing) {
            const CostView ce = g.edge(e).cost;
            bool drop = false;
            for (EdgeId f : crossing) {
                if (f == e) continue;
                const CostView cf = g.edge(f).cost;
                // Ties keep the smallest id; crossing is ascending so f < e
                // means f is the representative.
                if (dominates(cf, ce) || (f < e && cost_equal(cf, ce))) {
                    drop = true;
                    break;
                }
            }
            if (!drop) kept.push_back(e);
        }
        crossing = std::move(kept);
    }

    std::vector<ArcCopy> arcs;
    arcs.reserve(crossing.size());
    for (EdgeId e : crossing) {
        const Edge& edge = g.edge(e);
        const bool u_inside = tail.contains(edge.u);
        const NodeId interior = u_inside ? edge.u : edge.v;
        const NodeId fresh = u_inside ? edge.v : edge.u;
        arcs.push_back({tail.with(fresh), e, interior, fresh, edge.cost});
    }
    std::sort(arcs.begin(), arcs.end(), [](const ArcCopy& a, const ArcCopy& b) {
        return a.new_node != b.new_node ? a.new_node < b.new_node : a.preimage < b.preimage;
    });
    return arcs;
}

TransitionGraphSize explicit_graph(const MultiGraph& g, Pruning pruning) {
    if (g.node_count() > kExplicitGraphMaxNodes)
        throw std::invalid_argument("explicit transition graph is limited to 20 nodes");

    const NodeMask target = g.all_nodes();
    TransitionGraphSize size;
    std::unordered_set<NodeMask> seen;
    std::vector<NodeMask> layer{NodeMask::single(g.root())};
    seen.insert(layer.front());

    // Arcs only connect consecutive layers, so a layer-by-layer sweep visits
    // every reachable node exactly once.
    while (!layer.empty()) {
        std::vector<NodeMask> next;
        for (NodeMask u : layer) {
            ++size.nodes;
            if (u == target) continue;
            for (const ArcCopy& a : build_outgoing(g, u, pruning)) {
                ++size.arcs;
                if (seen.insert(a.head).second) next.push_back(a.head);
            }
        }
        layer = std::move(next);
    }
    return size;
}

}  // namespace momst
