#include "momst/solve.hpp"

#include "momst/errors.hpp"

namespace momst {

const char* to_string(SolveStatus s) noexcept {
    switch (s) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::timeout: return "timeout";
    case SolveStatus::memout: return "memout";
    }
    return "unknown";
}

namespace detail {

bool frontier_blocks(const Frontier& f, CostView y, bool skip_first, bool verify, bool strict) {
    auto check = [&](bool skip) { return strict ? f.strictly_dominates(y, skip) : f.dominates(y, skip); };
    const bool blocked = check(skip_first);
    if (verify && skip_first && blocked != check(false))
        throw InvariantViolation("dimensionality reduction disagrees with full dominance check for " +
                                 to_string(y));
    return blocked;
}

bool LimitClock::within_limits(SolveStats& stats, SolveStatus& status) const {
    stats.solve_time_s = elapsed();
    if (opts_.progress) opts_.progress(stats);
    if (stats.solve_time_s > opts_.time_limit_s) {
        status = SolveStatus::timeout;
        return false;
    }
    if (stats.memory_bytes > opts_.memory_limit_bytes) {
        status = SolveStatus::memout;
        return false;
    }
    return true;
}

}  // namespace detail
}  // namespace momst
