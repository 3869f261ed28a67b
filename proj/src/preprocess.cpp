#include "momst/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

#include "momst/disjoint_sets.hpp"
#include "momst/errors.hpp"

namespace momst {

namespace {

// Original graph with some edges deleted and some node classes merged.
class WorkGraph {
public:
    explicit WorkGraph(const MultiGraph& g) : g_(g), classes_(g.node_count()), alive_(g.edge_count(), true) {}

    std::size_t edge_count() const noexcept { return alive_.size(); }
    bool alive(std::size_t i) const noexcept { return alive_[i]; }
    void remove(std::size_t i) noexcept { alive_[i] = false; }

    bool is_loop(std::size_t i) {
        const Edge& e = g_.edges()[i];
        return classes_.same(e.u, e.v);
    }

    void contract(std::size_t i) {
        const Edge& e = g_.edges()[i];
        classes_.unite(e.u, e.v);
        alive_[i] = false;
    }

    // Are the endpoints of edge i connected through other live edges f for
    // which keep(c(f)) holds?
    template <class Keep>
    bool endpoints_connected(std::size_t skip, Keep keep) {
        DisjointSets reach(g_.node_count());
        const auto edges = g_.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i == skip || !alive_[i] || !keep(CostView(edges[i].cost))) continue;
            reach.unite(classes_.find(edges[i].u), classes_.find(edges[i].v));
        }
        return reach.same(classes_.find(edges[skip].u), classes_.find(edges[skip].v));
    }

    bool red(std::size_t i) {
        const CostView ce = g_.edges()[i].cost;
        return endpoints_connected(i, [&](CostView cf) { return dominates(cf, ce); });
    }

    bool blue(std::size_t i) {
        const CostView ce = g_.edges()[i].cost;
        return !endpoints_connected(i, [&](CostView cf) { return !dominates_or_equal(ce, cf); });
    }

    bool connected() {
        DisjointSets reach(g_.node_count());
        std::size_t classes = 0;
        for (NodeId v = 0; v < g_.node_count(); ++v) classes += classes_.find(v) == v;
        const auto edges = g_.edges();
        std::size_t merged = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (alive_[i]) merged += reach.unite(classes_.find(edges[i].u), classes_.find(edges[i].v));
        return merged + 1 == classes;
    }

    NodeId rep(NodeId v) { return classes_.find(v); }

private:
    const MultiGraph& g_;
    DisjointSets classes_;
    std::vector<bool> alive_;
};

}  // namespace

bool is_red(const MultiGraph& g, EdgeId e) {
    WorkGraph w(g);
    return w.red(e.index);
}

bool is_blue(const MultiGraph& g, EdgeId e) {
    WorkGraph w(g);
    return w.blue(e.index);
}

Reduction identity_reduction(const MultiGraph& g) {
    Reduction r{g, {}, {}, {}, CostVector(g.dimension()), 0, 0};
    r.node_map.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) r.node_map[v] = v;
    for (std::uint32_t i = 0; i < g.edge_count(); ++i) r.edge_map.emplace_back(i);
    return r;
}

Reduction reduce(const MultiGraph& g) {
    WorkGraph w(g);
    std::vector<EdgeId> blue;
    std::size_t red_count = 0;

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < w.edge_count(); ++i) {
            if (!w.alive(i)) continue;
            if (w.is_loop(i)) {
                w.remove(i);
                continue;
            }
            if (!w.red(i)) continue;
            w.remove(i);
            ++red_count;
            changed = true;
            if (!w.connected()) throw InvariantViolation("red edge deletion disconnected the graph");
        }
        for (std::size_t i = 0; i < w.edge_count(); ++i) {
            if (!w.alive(i)) continue;
            if (w.is_loop(i)) {
                w.remove(i);
                continue;
            }
            if (!w.blue(i)) continue;
            w.contract(i);
            blue.emplace_back(static_cast<std::uint32_t>(i));
            changed = true;
        }
    }

    // Reduced nodes are numbered by the smallest original node of their class.
    constexpr NodeId kUnset = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> rep_id(g.node_count(), kUnset);
    std::vector<NodeId> node_map(g.node_count());
    NodeId next = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        NodeId& id = rep_id[w.rep(v)];
        if (id == kUnset) id = next++;
        node_map[v] = id;
    }

    MultiGraph reduced(next, g.dimension(), node_map[g.root()]);
    std::vector<EdgeId> edge_map;
    for (std::size_t i = 0; i < w.edge_count(); ++i) {
        if (!w.alive(i) || w.is_loop(i)) continue;
        const Edge& e = g.edges()[i];
        reduced.add_edge(node_map[e.u], node_map[e.v], e.cost);
        edge_map.emplace_back(static_cast<std::uint32_t>(i));
    }
    if (!reduced.is_connected()) throw InvariantViolation("reduction produced a disconnected graph");

    std::sort(blue.begin(), blue.end());
    Reduction r{std::move(reduced), std::move(node_map), std::move(edge_map), blue,
                total_cost(g, blue), red_count, blue.size()};
    return r;
}

std::vector<EdgeId> lift(const Reduction& r, std::span<const EdgeId> reduced_tree) {
    std::vector<EdgeId> out(r.blue_edges.begin(), r.blue_edges.end());
    for (EdgeId e : reduced_tree) out.push_back(r.edge_map.at(e.index));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace momst
