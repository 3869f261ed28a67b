#include <doctest.h>

#include <sstream>

#include "momst/bench.hpp"
#include "momst/errors.hpp"
#include "support.hpp"

using namespace momst;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) out.push_back(f);
    return out;
}

// Drops the two timing columns.
std::string without_timing(const std::string& line) {
    auto f = fields(line);
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (i != 11 && i != 12) out += f[i] + ",";
    return out;
}

std::vector<BenchJob> two_jobs() {
    std::vector<BenchJob> jobs;
    for (const char* line : {"family=complete n=6 d=3 correlation=anticorrelated seed=3",
                             "family=grid rows=2 cols=4 d=2 seed=4"}) {
        const InstanceSpec spec = parse_spec_line(line);
        jobs.push_back({instance_id(spec), [spec] { return generate(spec); }});
    }
    return jobs;
}

}  // namespace

TEST_CASE("csv header names every column once") {
    const auto header = fields(csv_header());
    CHECK(header.size() == 18);
    auto sorted = header;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(header[11] == "time_preprocess_s");
    CHECK(header[12] == "time_solve_s");
    CHECK(fields(csv_row(RunRecord{})).size() == header.size());
}

TEST_CASE("two instances times two algorithms give four rows") {
    const auto jobs = two_jobs();
    std::ostringstream first, second;
    run_bench(jobs, {Algorithm::igmda, Algorithm::bn}, RunOptions{}, 2, first);
    run_bench(jobs, {Algorithm::igmda, Algorithm::bn}, RunOptions{}, 1, second);

    const auto a = lines_of(first.str());
    const auto b = lines_of(second.str());
    REQUIRE(a.size() == 5);
    REQUIRE(b.size() == 5);
    CHECK(a[0] == csv_header());
    CHECK(fields(a[1])[0] == "complete-n6-d3-anticorrelated-s3");
    CHECK(fields(a[1])[3] == "igmda");
    CHECK(fields(a[2])[3] == "bn");
    CHECK(fields(a[3])[0] == "grid-2x4-d2-uncorrelated-s4");
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(without_timing(a[i]) == without_timing(b[i]));
        CHECK(fields(a[i])[7] == "solved");
    }
    // Both algorithms report the same number of solutions.
    CHECK(fields(a[1])[8] == fields(a[2])[8]);
}

TEST_CASE("a failing job becomes an error row") {
    std::vector<BenchJob> jobs{{"broken", []() -> MultiGraph { throw std::runtime_error("no such file"); }}};
    std::ostringstream out;
    run_bench(jobs, {Algorithm::igmda}, RunOptions{}, 1, out);
    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 2);
    CHECK(fields(rows[1])[0] == "broken");
    CHECK(fields(rows[1])[7] == "error");
}

TEST_CASE("run_instance lifts solutions back to the input graph") {
    const MultiGraph g = momst::testing::triangle();
    const RunOutput out = run_instance(g, "triangle", RunOptions{});
    CHECK(out.record.status == "solved");
    CHECK(out.record.red_count == 1);
    CHECK(out.record.blue_count == 2);
    CHECK(out.record.reduced_n == 1);
    REQUIRE(out.solutions.size() == 1);
    CHECK(format_solution(g, out.solutions[0]) == "3 2 : 1-3 2-3");
}

TEST_CASE("timeouts are reported, not thrown") {
    InstanceSpec spec;
    spec.n = 12;
    spec.dimension = 4;
    spec.correlation = Correlation::anticorrelated;
    RunOptions opts;
    opts.solve.time_limit_s = 0.0;
    opts.solve.check_interval = 1;
    const RunOutput out = run_instance(generate(spec), instance_id(spec), opts);
    CHECK(out.status == SolveStatus::timeout);
    CHECK(out.record.status == "timeout");
    CHECK(out.record.time_solve_s >= 0.0);
}

TEST_CASE("spec lines") {
    const InstanceSpec s = parse_spec_line("family=random_sparse n=9 i=3 d=4 correlation=correlated seed=5 max_cost=7");
    CHECK(s.family == Family::random_sparse);
    CHECK(s.n == 9);
    CHECK(s.edge_factor == 3);
    CHECK(s.dimension == 4);
    CHECK(s.correlation == Correlation::correlated);
    CHECK(s.seed == 5);
    CHECK(s.max_cost == 7);
    CHECK_THROWS_AS(parse_spec_line("family=grid n=4"), InstanceError);
    CHECK_THROWS_AS(parse_spec_line("n=abc"), InstanceError);
    CHECK_THROWS_AS(parse_spec_line("colour=red"), InstanceError);
    CHECK_THROWS_AS(parse_spec_line("family=ring"), InstanceError);
}

TEST_CASE("describe_instance") {
    CHECK(describe_instance("complete-n5-d3-anticorrelated-s1") ==
          std::pair<std::string, std::string>{"complete", "anticorrelated"});
    CHECK(describe_instance("random_sparse-n9-i3-d2-correlated-s4").first == "random_sparse");
    CHECK(describe_instance("triangle").first.empty());
}
