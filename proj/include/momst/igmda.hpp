#pragma once

#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "momst/addressable_heap.hpp"
#include "momst/cost.hpp"
#include "momst/graph.hpp"
#include "momst/label_store.hpp"
#include "momst/solve.hpp"

namespace momst {

// Explored labels displaced from the queue, per transition arc, kept in
// lex-nondecreasing order.
using NqpList = std::deque<LabelId>;

// Pops list heads that `permanent` dominates-or-equals, then removes and
// returns the lex-smallest surviving head across all lists (first list wins
// ties). Returns nothing if every list runs empty.
std::optional<LabelId> next_queue_path(const Frontier& permanent, std::span<NqpList* const> lists,
                                       const LabelStore& labels, bool skip_first = true,
                                       bool verify = false);

/// Implicit Graph Multiobjective Dijkstra. Transition nodes and their pruned
/// outgoing arcs are created on demand; the queue holds at most one explored
/// label per transition node and the others wait in per-arc NQP lists.
///
/// run() drives the search to completion; step() performs one extraction so
/// that tests can inspect the intermediate queue and list contents.
class Igmda {
public:
    explicit Igmda(const MultiGraph& g, SolveOptions opts = {});
    Igmda(const Igmda&) = delete;
    Igmda& operator=(const Igmda&) = delete;

    SolveResult run();

    // One queue extraction. Returns false once the queue is empty.
    bool step();

    const SolveStats& stats() const noexcept { return stats_; }
    std::vector<Solution> solutions() const;

    std::optional<CostVector> queued_cost(NodeMask node) const;
    std::vector<CostVector> nqp_costs(NodeMask tail, EdgeId preimage) const;
    const Frontier* frontier(NodeMask node) const;

private:
    struct State {
        NodeMask mask;
        std::uint64_t index;
        Frontier frontier;
        std::vector<LabelId> permanent;
        std::vector<std::uint32_t> outgoing;
        std::vector<std::uint32_t> incoming;
        LabelId queued = kNoLabel;
        bool expanded = false;
    };

    struct Arc {
        std::uint32_t tail;
        std::uint32_t head;
        EdgeId edge;
        CostVector cost;
        NqpList nqp;
    };

    struct QueueLess {
        const Igmda* self;
        bool operator()(std::uint32_t a, std::uint32_t b) const;
    };

    std::uint32_t state_for(NodeMask mask);
    void expand(std::uint32_t state);
    bool propagate(LabelId p);
    std::optional<LabelId> next_queue_path(std::uint32_t state);
    LabelId new_label(CostView cost, std::uint32_t state, LabelId pred, std::uint32_t arc);
    void check_extraction(std::uint32_t state, LabelId p);
    std::size_t memory_bytes() const;

    const MultiGraph& g_;
    SolveOptions opts_;
    NodeMask target_;
    LabelStore labels_;
    std::vector<std::uint32_t> label_arc_;
    std::vector<State> states_;
    std::unordered_map<NodeMask, std::uint32_t> state_of_;
    std::vector<Arc> arcs_;
    AddressableHeap<QueueLess> queue_;
    SolveStats stats_;
    std::size_t nqp_entries_ = 0;
    std::optional<CostVector> last_extracted_;
};

SolveResult solve_igmda(const MultiGraph& g, const SolveOptions& opts = {});

}  // namespace momst
