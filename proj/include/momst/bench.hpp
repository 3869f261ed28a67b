#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momst/graph.hpp"
#include "momst/instance_io.hpp"
#include "momst/solve.hpp"

namespace momst {

enum class Algorithm { igmda, bn };

const char* to_string(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view s);

struct RunOptions {
    Algorithm algorithm = Algorithm::igmda;
    bool preprocess = true;
    SolveOptions solve;
};

// One CSV row. status is solved, timeout, memout or error.
struct RunRecord {
    std::string instance;
    std::string family;       // parsed from generated ids, empty otherwise
    std::string correlation;  // likewise
    std::string algorithm;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t d = 0;
    std::string status;
    std::size_t solutions = 0;
    std::uint64_t iterations = 0;
    std::uint64_t transition_nodes = 0;
    double time_preprocess_s = 0.0;
    double time_solve_s = 0.0;
    std::size_t red_count = 0;
    std::size_t blue_count = 0;
    std::size_t reduced_n = 0;
    std::size_t reduced_m = 0;
    std::uint64_t max_frontier = 0;
};

struct RunOutput {
    RunRecord record;
    SolveStatus status = SolveStatus::solved;
    std::vector<Solution> solutions;  // original edge ids and costs, lex-sorted
};

// Family and correlation named in an id produced by instance_id(), or empty
// strings if `instance` does not follow that pattern.
std::pair<std::string, std::string> describe_instance(std::string_view instance);

// Preprocess (optional), solve, and lift the solutions back to `g`.
RunOutput run_instance(const MultiGraph& g, const std::string& instance, const RunOptions& opts);

// "c1 ... cd : u-v u-v ..." with 1-indexed nodes.
std::string format_solution(const MultiGraph& g, const Solution& s);

std::string csv_header();
std::string csv_row(const RunRecord& r);

// "family=complete n=10 d=3 correlation=anticorrelated seed=7" and friends
// (rows=, cols=, i=, max_cost=). Throws InstanceError(invalid_spec).
InstanceSpec parse_spec_line(std::string_view line);

struct BenchJob {
    std::string instance;
    std::function<MultiGraph()> load;
};

// Runs every job under every algorithm and writes one CSV row per pair to
// `csv` in job-major order, flushing after each row. Up to `threads`
// workers; a failing job yields a status=error row.
void run_bench(const std::vector<BenchJob>& jobs, const std::vector<Algorithm>& algorithms,
               const RunOptions& base, std::size_t threads, std::ostream& csv);

}  // namespace momst
