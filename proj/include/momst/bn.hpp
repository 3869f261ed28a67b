#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <unordered_map>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"
#include "momst/label_store.hpp"
#include "momst/solve.hpp"
#include "momst/transition.hpp"

namespace momst {

// Position of every node in the order it joined the tree (root = 0), built
// once per extracted label so that minimality tests are O(1) per arc.
class JoinOrder {
public:
    explicit JoinOrder(std::span<const NodeId> order);

    bool contains(NodeId v) const noexcept { return pos_[v] >= 0; }
    int position(NodeId v) const noexcept { return pos_[v]; }

private:
    std::array<std::int8_t, kMaxNodes> pos_;
};

// Oriented preimage of a path's last arc.
struct LastArc {
    NodeId interior;
    NodeId new_node;
};

// Whether appending the arc [interior, new_node] keeps a minimal path
// minimal: the interior endpoint must have joined strictly later than the
// previous arc's interior endpoint, or be the same node with a larger new
// node id. The first arc of a path is always allowed.
bool extends_minimally(const JoinOrder& order, std::optional<LastArc> last, NodeId interior,
                       NodeId new_node) noexcept;

// The arcs of `outgoing` whose expansion of the path keeps it minimal.
std::vector<ArcCopy> minimal_extensions(std::span<const NodeId> order, std::optional<LastArc> last,
                                        std::span<const ArcCopy> outgoing);

/// Build Network: label-setting search over the unpruned transition graph in
/// which only minimal paths (one canonical path per tree) are expanded.
/// Explored labels are queued lazily, several per transition node, and
/// re-checked against the permanent set when extracted.
class BuildNetwork {
public:
    explicit BuildNetwork(const MultiGraph& g, SolveOptions opts = {});
    BuildNetwork(const BuildNetwork&) = delete;
    BuildNetwork& operator=(const BuildNetwork&) = delete;

    SolveResult run();
    bool step();

    const SolveStats& stats() const noexcept { return stats_; }
    std::vector<Solution> solutions() const;

private:
    struct State {
        NodeMask mask;
        Frontier frontier;
        std::vector<LabelId> permanent;
        std::vector<ArcCopy> outgoing;
        std::vector<std::uint32_t> heads;
        std::uint32_t queued = 0;
        bool expanded = false;
    };

    struct QueueGreater {
        const BuildNetwork* self;
        bool operator()(LabelId a, LabelId b) const;
    };

    std::uint32_t state_for(NodeMask mask);
    void expand(std::uint32_t state);
    LabelId new_label(CostView cost, std::uint32_t state, LabelId pred, EdgeId edge,
                      std::optional<LastArc> arc);
    std::span<const NodeId> order_of(LabelId id) const;
    void push(LabelId id);
    void make_permanent(std::uint32_t state, LabelId p);
    std::size_t memory_bytes() const;

    const MultiGraph& g_;
    SolveOptions opts_;
    NodeMask target_;
    LabelStore labels_;
    std::vector<LastArc> last_arc_;
    std::vector<std::uint32_t> order_offset_;
    std::vector<NodeId> order_pool_;
    std::vector<State> states_;
    std::unordered_map<NodeMask, std::uint32_t> state_of_;
    std::priority_queue<LabelId, std::vector<LabelId>, QueueGreater> queue_;
    std::vector<LabelId> full_set_labels_;
    SolveStats stats_;
    std::optional<CostVector> last_extracted_;
};

SolveResult solve_bn(const MultiGraph& g, const SolveOptions& opts = {});

}  // namespace momst
