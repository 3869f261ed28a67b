#include "momst/bn.hpp"

#include <algorithm>
#include <stdexcept>

#include "momst/errors.hpp"

namespace momst {

namespace {
constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
}

JoinOrder::JoinOrder(std::span<const NodeId> order) {
    pos_.fill(-1);
    for (std::size_t i = 0; i < order.size(); ++i) pos_[order[i]] = static_cast<std::int8_t>(i);
}

bool extends_minimally(const JoinOrder& order, std::optional<LastArc> last, NodeId interior,
                       NodeId new_node) noexcept {
    if (!last) return true;
    const int prev = order.position(last->interior);
    const int cur = order.position(interior);
    return cur > prev || (cur == prev && new_node > last->new_node);
}

std::vector<ArcCopy> minimal_extensions(std::span<const NodeId> order, std::optional<LastArc> last,
                                        std::span<const ArcCopy> outgoing) {
    const JoinOrder joined(order);
    std::vector<ArcCopy> out;
    for (const ArcCopy& a : outgoing)
        if (extends_minimally(joined, last, a.interior, a.new_node)) out.push_back(a);
    return out;
}

bool BuildNetwork::QueueGreater::operator()(LabelId a, LabelId b) const {
    const CostView ca = self->labels_.cost(a);
    const CostView cb = self->labels_.cost(b);
    const bool by_sum = self->opts_.order == QueueOrder::sum;
    if (by_sum ? sum_less(cb, ca) : lex_less(cb, ca)) return true;
    if (by_sum ? sum_less(ca, cb) : lex_less(ca, cb)) return false;
    return b < a;
}

BuildNetwork::BuildNetwork(const MultiGraph& g, SolveOptions opts)
    : g_(g),
      opts_(std::move(opts)),
      target_(g.all_nodes()),
      labels_(g.dimension()),
      queue_(QueueGreater{this}) {
    const std::uint32_t source = state_for(NodeMask::single(g.root()));
    const CostVector zero(g.dimension());
    push(new_label(zero, source, kNoLabel, EdgeId{}, std::nullopt));
}

std::uint32_t BuildNetwork::state_for(NodeMask mask) {
    auto [it, inserted] = state_of_.try_emplace(mask, static_cast<std::uint32_t>(states_.size()));
    if (inserted) {
        states_.push_back(State{mask, Frontier(g_.dimension()), {}, {}, {}});
        ++stats_.transition_nodes;
    }
    return it->second;
}

void BuildNetwork::expand(std::uint32_t state) {
    auto arcs = build_outgoing(g_, states_[state].mask, Pruning::none);
    std::vector<std::uint32_t> heads;
    heads.reserve(arcs.size());
    for (const ArcCopy& a : arcs) heads.push_back(state_for(a.head));
    stats_.arcs += arcs.size();
    states_[state].outgoing = std::move(arcs);
    states_[state].heads = std::move(heads);
    states_[state].expanded = true;
}

LabelId BuildNetwork::new_label(CostView cost, std::uint32_t state, LabelId pred, EdgeId edge,
                                std::optional<LastArc> arc) {
    const LabelId id = labels_.add(cost, state, pred, edge);
    last_arc_.push_back(arc.value_or(LastArc{kNoNode, kNoNode}));
    order_offset_.push_back(static_cast<std::uint32_t>(order_pool_.size()));
    if (pred == kNoLabel) {
        order_pool_.push_back(g_.root());
    } else {
        // The parent's order is copied before appending, since the pool may
        // reallocate.
        const std::uint32_t from = order_offset_[pred];
        const std::size_t len = states_[labels_[pred].state].mask.count();
        for (std::size_t i = 0; i < len; ++i) order_pool_.push_back(order_pool_[from + i]);
        order_pool_.push_back(arc->new_node);
    }
    ++stats_.labels;
    return id;
}

std::span<const NodeId> BuildNetwork::order_of(LabelId id) const {
    const std::size_t len = states_[labels_[id].state].mask.count();
    return {order_pool_.data() + order_offset_[id], len};
}

void BuildNetwork::push(LabelId id) {
    queue_.push(id);
    const std::uint32_t count = ++states_[labels_[id].state].queued;
    stats_.max_queue_entries_per_node = std::max<std::uint64_t>(stats_.max_queue_entries_per_node, count);
}

void BuildNetwork::make_permanent(std::uint32_t state, LabelId p) {
    State& s = states_[state];
    if (!opts_.exhaustive) {
        if (opts_.check_invariants) {
            for (std::size_t i = 0; i < s.frontier.size(); ++i)
                if (dominates(labels_.cost(p), s.frontier[i]))
                    throw InvariantViolation("new permanent label dominates an older one");
        }
        s.frontier.push_back(labels_.cost(p));
        stats_.max_frontier = std::max<std::uint64_t>(stats_.max_frontier, s.frontier.size());
    }
    s.permanent.push_back(p);
    ++stats_.permanent_count;
}

bool BuildNetwork::step() {
    if (queue_.empty()) return false;
    const LabelId p = queue_.top();
    queue_.pop();
    const std::uint32_t u = labels_[p].state;
    --states_[u].queued;
    ++stats_.iterations;

    const bool lex = opts_.order == QueueOrder::lex;
    const bool verify = opts_.check_invariants;
    if (verify && lex) {
        if (last_extracted_ && lex_less(labels_.cost(p), *last_extracted_))
            throw InvariantViolation("extraction order is not lex-nondecreasing");
        last_extracted_ = CostVector(labels_.cost(p));
    }

    // Strict dominance below the full node set: equal-cost prefixes are not
    // interchangeable under the minimal-path rule.
    const bool at_target = states_[u].mask == target_;
    if (!opts_.exhaustive &&
        detail::frontier_blocks(states_[u].frontier, labels_.cost(p), lex, verify, !at_target))
        return true;

    if (at_target) {
        ++stats_.full_set_extractions;
        full_set_labels_.push_back(p);
        make_permanent(u, p);
        return true;
    }

    if (!states_[u].expanded) expand(u);

    const JoinOrder joined(order_of(p));
    const LastArc last = last_arc_[p];
    const std::optional<LastArc> last_opt =
        last.interior == kNoNode ? std::nullopt : std::optional<LastArc>(last);

    const CostVector base(labels_.cost(p));
    CostVector q(g_.dimension());
    bool success = false;
    for (std::size_t i = 0; i < states_[u].outgoing.size(); ++i) {
        const ArcCopy& a = states_[u].outgoing[i];
        if (!extends_minimally(joined, last_opt, a.interior, a.new_node)) continue;
        const std::uint32_t w = states_[u].heads[i];
        add_checked(base, a.cost, q.mutable_view());
        if (!opts_.exhaustive &&
            detail::frontier_blocks(states_[w].frontier, q, lex, verify, states_[w].mask != target_))
            continue;
        push(new_label(q, w, p, a.preimage, LastArc{a.interior, a.new_node}));
        success = true;
    }
    if (success || opts_.exhaustive) make_permanent(u, p);
    return true;
}

std::size_t BuildNetwork::memory_bytes() const {
    return labels_.memory_bytes() + last_arc_.capacity() * sizeof(LastArc) +
           order_offset_.capacity() * sizeof(std::uint32_t) +
           order_pool_.capacity() * sizeof(NodeId) + states_.capacity() * sizeof(State) +
           stats_.arcs * (sizeof(ArcCopy) + sizeof(std::uint32_t)) +
           stats_.permanent_count * (sizeof(LabelId) + g_.dimension() * sizeof(Cost)) +
           queue_.size() * sizeof(LabelId) + state_of_.size() * 4 * sizeof(void*);
}

SolveResult BuildNetwork::run() {
    detail::LimitClock clock(opts_);
    SolveResult result;
    while (step()) {
        if (clock.due()) {
            stats_.memory_bytes = memory_bytes();
            if (!clock.within_limits(stats_, result.status)) break;
        }
    }
    stats_.memory_bytes = memory_bytes();
    stats_.solve_time_s = clock.elapsed();
    result.stats = stats_;
    result.solutions = solutions();
    return result;
}

std::vector<Solution> BuildNetwork::solutions() const {
    std::vector<Solution> out;
    out.reserve(full_set_labels_.size());
    for (const LabelId id : full_set_labels_)
        out.push_back({CostVector(labels_.cost(id)), labels_.tree(id)});
    return out;
}

SolveResult solve_bn(const MultiGraph& g, const SolveOptions& opts) {
    BuildNetwork solver(g, opts);
    return solver.run();
}

}  // namespace momst
