#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"
#include "momst/transition.hpp"

namespace momst {

enum class SolveStatus { solved, timeout, memout };

const char* to_string(SolveStatus s) noexcept;

// Priority of the explored-label queue.
enum class QueueOrder {
    lex,  // lexicographic; enables skipping the first component in dominance checks
    sum,  // sum of components, ties lexicographic (BN ablation only)
};

struct SolveStats {
    std::uint64_t iterations = 0;        // queue extractions
    std::uint64_t transition_nodes = 0;  // created transition nodes
    std::uint64_t arcs = 0;              // created transition arcs
    std::uint64_t labels = 0;            // labels allocated
    std::uint64_t permanent_count = 0;
    std::uint64_t max_frontier = 0;
    std::uint64_t max_queue_entries_per_node = 0;
    std::uint64_t full_set_extractions = 0;
    std::size_t memory_bytes = 0;  // tracked solver allocations
    double solve_time_s = 0.0;
};

struct SolveOptions {
    Pruning pruning = Pruning::cut_star;  // IG-MDA only; BN always builds unpruned arcs
    QueueOrder order = QueueOrder::lex;   // BN only; IG-MDA requires lex
    bool exhaustive = false;              // BN only: no dominance checks at all (test mode)

    // Re-verify the solver invariants while running and throw
    // InvariantViolation on the first failure. Slow.
    bool check_invariants = false;

    double time_limit_s = std::numeric_limits<double>::infinity();
    std::size_t memory_limit_bytes = std::numeric_limits<std::size_t>::max();
    std::uint64_t check_interval = 256;  // iterations between limit checks
    std::function<void(const SolveStats&)> progress;
};

struct Solution {
    CostVector cost;
    std::vector<EdgeId> edges;  // ascending
};

struct SolveResult {
    SolveStatus status = SolveStatus::solved;
    std::vector<Solution> solutions;  // permanent labels at the full node set, in extraction order
    SolveStats stats;
};

namespace detail {

// Frontier dominance query used by both solvers: dominated-or-equal, or only
// strictly dominated when `strict`. When verify is set, the reduced comparison
// is cross-checked against the full one.
bool frontier_blocks(const Frontier& f, CostView y, bool skip_first, bool verify, bool strict = false);

class LimitClock {
public:
    explicit LimitClock(const SolveOptions& opts)
        : opts_(opts), start_(std::chrono::steady_clock::now()) {}

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    // True once every check_interval calls.
    bool due() noexcept {
        if (++since_check_ < opts_.check_interval) return false;
        since_check_ = 0;
        return true;
    }

    // Refreshes solve_time_s, reports progress and returns false (setting
    // status) if the time or memory budget is exhausted. The caller updates
    // stats.memory_bytes first.
    bool within_limits(SolveStats& stats, SolveStatus& status) const;

private:
    const SolveOptions& opts_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t since_check_ = 0;
};

}  // namespace detail

}  // namespace momst
