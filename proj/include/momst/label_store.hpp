#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"

namespace momst {

using LabelId = std::uint32_t;
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

struct LabelRecord {
    std::uint32_t state;  // owning transition node, solver-specific index
    LabelId pred;         // kNoLabel for the initial label
    EdgeId last_edge;     // meaningless when pred == kNoLabel
};

/// Append-only arena of labels. Costs live in one flat buffer with stride d;
/// labels are never freed individually because later labels refer to their
/// predecessors by id.
class LabelStore {
public:
    explicit LabelStore(std::size_t dimension) : dim_(dimension) {}

    LabelId add(CostView cost, std::uint32_t state, LabelId pred, EdgeId last_edge);

    std::size_t size() const noexcept { return records_.size(); }
    std::size_t dimension() const noexcept { return dim_; }
    const LabelRecord& operator[](LabelId id) const noexcept { return records_[id]; }

    CostView cost(LabelId id) const noexcept { return {costs_.data() + std::size_t{id} * dim_, dim_}; }

    // Preimage edges along the predecessor chain, ascending by id. Throws
    // InvariantViolation if the chain is broken.
    std::vector<EdgeId> tree(LabelId id) const;

    std::size_t memory_bytes() const noexcept {
        return records_.capacity() * sizeof(LabelRecord) + costs_.capacity() * sizeof(Cost);
    }

private:
    std::size_t dim_;
    std::vector<LabelRecord> records_;
    std::vector<Cost> costs_;
};

}  // namespace momst
