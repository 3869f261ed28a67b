#include "momst/label_store.hpp"

#include <algorithm>
#include <stdexcept>

#include "momst/errors.hpp"

namespace momst {

LabelId LabelStore::add(CostView cost, std::uint32_t state, LabelId pred, EdgeId last_edge) {
    assert(cost.size() == dim_);
    if (records_.size() >= kNoLabel) throw std::length_error("label store exhausted");
    const auto id = static_cast<LabelId>(records_.size());
    records_.push_back({state, pred, last_edge});
    costs_.insert(costs_.end(), cost.begin(), cost.end());
    return id;
}

std::vector<EdgeId> LabelStore::tree(LabelId id) const {
    if (id >= records_.size()) throw InvariantViolation("label id out of range");
    std::vector<EdgeId> edges;
    for (LabelId cur = id; records_[cur].pred != kNoLabel;) {
        const LabelId pred = records_[cur].pred;
        // Predecessors are always created first, so ids strictly decrease.
        if (pred >= cur) throw InvariantViolation("broken predecessor chain");
        edges.push_back(records_[cur].last_edge);
        cur = pred;
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace momst
