#include "momst/igmda.hpp"

#include <stdexcept>

#include "momst/errors.hpp"

namespace momst {

namespace {
constexpr std::uint32_t kNoArc = std::numeric_limits<std::uint32_t>::max();
}

std::optional<LabelId> next_queue_path(const Frontier& permanent, std::span<NqpList* const> lists,
                                       const LabelStore& labels, bool skip_first, bool verify) {
    NqpList* best = nullptr;
    for (NqpList* list : lists) {
        // Frontiers only grow, so a dominated head stays dominated: drop it.
        while (!list->empty() &&
               detail::frontier_blocks(permanent, labels.cost(list->front()), skip_first, verify))
            list->pop_front();
        if (list->empty()) continue;
        if (!best || lex_less(labels.cost(list->front()), labels.cost(best->front()))) best = list;
    }
    if (!best) return std::nullopt;
    const LabelId id = best->front();
    best->pop_front();
    return id;
}

bool Igmda::QueueLess::operator()(std::uint32_t a, std::uint32_t b) const {
    const State& sa = self->states_[a];
    const State& sb = self->states_[b];
    const CostView ca = self->labels_.cost(sa.queued);
    const CostView cb = self->labels_.cost(sb.queued);
    if (lex_less(ca, cb)) return true;
    if (lex_less(cb, ca)) return false;
    return sa.index < sb.index;
}

Igmda::Igmda(const MultiGraph& g, SolveOptions opts)
    : g_(g),
      opts_(std::move(opts)),
      target_(g.all_nodes()),
      labels_(g.dimension()),
      queue_(QueueLess{this}) {
    if (opts_.order != QueueOrder::lex)
        throw std::invalid_argument("IG-MDA requires lexicographic queue order");
    if (opts_.exhaustive) throw std::invalid_argument("exhaustive mode is a BN-only option");

    const std::uint32_t source = state_for(NodeMask::single(g.root()));
    const CostVector zero(g.dimension());
    states_[source].queued = new_label(zero, source, kNoLabel, kNoArc);
    queue_.push(source);
    stats_.max_queue_entries_per_node = 1;
}

std::uint32_t Igmda::state_for(NodeMask mask) {
    auto [it, inserted] = state_of_.try_emplace(mask, static_cast<std::uint32_t>(states_.size()));
    if (inserted) {
        states_.push_back(State{mask, node_index(mask, g_.root()), Frontier(g_.dimension()), {}, {}, {}});
        ++stats_.transition_nodes;
    }
    return it->second;
}

LabelId Igmda::new_label(CostView cost, std::uint32_t state, LabelId pred, std::uint32_t arc) {
    const EdgeId edge = arc == kNoArc ? EdgeId{} : arcs_[arc].edge;
    const LabelId id = labels_.add(cost, state, pred, edge);
    label_arc_.push_back(arc);
    ++stats_.labels;
    return id;
}

void Igmda::expand(std::uint32_t state) {
    const NodeMask tail = states_[state].mask;
    for (ArcCopy& a : build_outgoing(g_, tail, opts_.pruning)) {
        const std::uint32_t head = state_for(a.head);
        const auto id = static_cast<std::uint32_t>(arcs_.size());
        arcs_.push_back(Arc{state, head, a.preimage, std::move(a.cost), {}});
        states_[state].outgoing.push_back(id);
        states_[head].incoming.push_back(id);
        ++stats_.arcs;
    }
    states_[state].expanded = true;
}

bool Igmda::propagate(LabelId p) {
    const std::uint32_t u = labels_[p].state;
    if (!states_[u].expanded) expand(u);

    const bool verify = opts_.check_invariants;
    const CostVector base(labels_.cost(p));
    CostVector q(g_.dimension());
    bool success = false;

    for (const std::uint32_t arc_id : states_[u].outgoing) {
        const std::uint32_t w = arcs_[arc_id].head;
        add_checked(base, arcs_[arc_id].cost, q.mutable_view());
        if (detail::frontier_blocks(states_[w].frontier, q, true, verify)) continue;
        success = true;

        const LabelId incumbent = states_[w].queued;
        if (incumbent == kNoLabel) {
            states_[w].queued = new_label(q, w, p, arc_id);
            queue_.push(w);
        } else if (lex_less(q, labels_.cost(incumbent))) {
            const bool keep_incumbent = !dominates_or_equal(q, labels_.cost(incumbent));
            states_[w].queued = new_label(q, w, p, arc_id);
            queue_.decrease(w);
            if (keep_incumbent) {
                arcs_[label_arc_[incumbent]].nqp.push_front(incumbent);
                ++nqp_entries_;
            }
        } else if (!dominates_or_equal(labels_.cost(incumbent), q)) {
            const LabelId id = new_label(q, w, p, arc_id);
            arcs_[arc_id].nqp.push_back(id);
            ++nqp_entries_;
        }
    }
    return success;
}

std::optional<LabelId> Igmda::next_queue_path(std::uint32_t state) {
    std::vector<NqpList*> lists;
    lists.reserve(states_[state].incoming.size());
    std::size_t before = 0;
    for (const std::uint32_t a : states_[state].incoming) {
        lists.push_back(&arcs_[a].nqp);
        before += arcs_[a].nqp.size();
    }
    auto next = momst::next_queue_path(states_[state].frontier, lists, labels_, true,
                                       opts_.check_invariants);
    std::size_t after = 0;
    for (const NqpList* l : lists) after += l->size();
    nqp_entries_ -= before - after;
    return next;
}

void Igmda::check_extraction(std::uint32_t state, LabelId p) {
    const CostView cost = labels_.cost(p);
    if (last_extracted_ && lex_less(cost, *last_extracted_))
        throw InvariantViolation("extraction order is not lex-nondecreasing");
    last_extracted_ = CostVector(cost);
    if (states_[state].frontier.dominates(cost, false))
        throw InvariantViolation("extracted label is dominated by a permanent label");
    if (!queue_.valid()) throw InvariantViolation("queue holds duplicate or misplaced nodes");
}

bool Igmda::step() {
    if (queue_.empty()) return false;
    const std::uint32_t u = queue_.pop();
    const LabelId p = states_[u].queued;
    states_[u].queued = kNoLabel;
    ++stats_.iterations;
    if (opts_.check_invariants) check_extraction(u, p);

    bool success = false;
    if (states_[u].mask != target_) success = propagate(p);

    State& s = states_[u];
    if (s.mask == target_ || success) {
        if (opts_.check_invariants) {
            for (std::size_t i = 0; i < s.frontier.size(); ++i)
                if (dominates(labels_.cost(p), s.frontier[i]))
                    throw InvariantViolation("new permanent label dominates an older one");
        }
        s.frontier.push_back(labels_.cost(p));
        s.permanent.push_back(p);
        ++stats_.permanent_count;
        stats_.max_frontier = std::max<std::uint64_t>(stats_.max_frontier, s.frontier.size());
    }

    if (const auto next = next_queue_path(u)) {
        states_[u].queued = *next;
        queue_.push(u);
    }
    return true;
}

std::size_t Igmda::memory_bytes() const {
    return labels_.memory_bytes() + label_arc_.capacity() * sizeof(std::uint32_t) +
           states_.capacity() * sizeof(State) + arcs_.capacity() * sizeof(Arc) +
           (nqp_entries_ + stats_.permanent_count) * sizeof(LabelId) +
           stats_.permanent_count * g_.dimension() * sizeof(Cost) +
           state_of_.size() * 4 * sizeof(void*);
}

SolveResult Igmda::run() {
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

std::vector<Solution> Igmda::solutions() const {
    std::vector<Solution> out;
    const auto it = state_of_.find(target_);
    if (it == state_of_.end()) return out;
    for (const LabelId id : states_[it->second].permanent)
        out.push_back({CostVector(labels_.cost(id)), labels_.tree(id)});
    return out;
}

std::optional<CostVector> Igmda::queued_cost(NodeMask node) const {
    const auto it = state_of_.find(node);
    if (it == state_of_.end() || states_[it->second].queued == kNoLabel) return std::nullopt;
    return CostVector(labels_.cost(states_[it->second].queued));
}

std::vector<CostVector> Igmda::nqp_costs(NodeMask tail, EdgeId preimage) const {
    std::vector<CostVector> out;
    const auto it = state_of_.find(tail);
    if (it == state_of_.end()) return out;
    for (const std::uint32_t a : states_[it->second].outgoing) {
        if (arcs_[a].edge != preimage) continue;
        for (const LabelId id : arcs_[a].nqp) out.emplace_back(labels_.cost(id));
    }
    return out;
}

const Frontier* Igmda::frontier(NodeMask node) const {
    const auto it = state_of_.find(node);
    return it == state_of_.end() ? nullptr : &states_[it->second].frontier;
}

SolveResult solve_igmda(const MultiGraph& g, const SolveOptions& opts) {
    Igmda solver(g, opts);
    return solver.run();
}

}  // namespace momst
