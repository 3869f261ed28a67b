#include "momst/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "momst/bn.hpp"
#include "momst/errors.hpp"
#include "momst/igmda.hpp"
#include "momst/preprocess.hpp"

namespace momst {

const char* to_string(Algorithm a) noexcept {
    return a == Algorithm::igmda ? "igmda" : "bn";
}

Algorithm parse_algorithm(std::string_view s) {
    if (s == "igmda") return Algorithm::igmda;
    if (s == "bn") return Algorithm::bn;
    throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

std::pair<std::string, std::string> describe_instance(std::string_view instance) {
    std::pair<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos <= instance.size()) {
        std::size_t dash = instance.find('-', pos);
        if (dash == std::string_view::npos) dash = instance.size();
        const std::string_view token = instance.substr(pos, dash - pos);
        if (pos == 0 && (token == "complete" || token == "grid" || token == "random_sparse")) out.first = token;
        if (token == "uncorrelated" || token == "correlated" || token == "anticorrelated") out.second = token;
        pos = dash + 1;
    }
    if (out.first.empty() || out.second.empty()) return {};
    return out;
}

RunOutput run_instance(const MultiGraph& g, const std::string& instance, const RunOptions& opts) {
    RunOutput out;
    RunRecord& rec = out.record;
    rec.instance = instance;
    std::tie(rec.family, rec.correlation) = describe_instance(instance);
    rec.algorithm = to_string(opts.algorithm);
    rec.n = g.node_count();
    rec.m = g.edge_count();
    rec.d = g.dimension();

    const auto t0 = std::chrono::steady_clock::now();
    const Reduction red = opts.preprocess ? reduce(g) : identity_reduction(g);
    rec.time_preprocess_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rec.red_count = red.red_count;
    rec.blue_count = red.blue_count;
    rec.reduced_n = red.reduced_graph.node_count();
    rec.reduced_m = red.reduced_graph.edge_count();

    const SolveResult result = opts.algorithm == Algorithm::igmda
                                   ? solve_igmda(red.reduced_graph, opts.solve)
                                   : solve_bn(red.reduced_graph, opts.solve);
    out.status = result.status;
    rec.status = to_string(result.status);
    rec.time_solve_s = result.stats.solve_time_s;
    rec.iterations = result.stats.iterations;
    rec.transition_nodes = result.stats.transition_nodes;
    rec.max_frontier = result.stats.max_frontier;

    for (const Solution& s : result.solutions)
        out.solutions.push_back({s.cost + red.blue_offset, lift(red, s.edges)});
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const Solution& a, const Solution& b) { return lex_less(a.cost, b.cost); });
    rec.solutions = out.solutions.size();
    return out;
}

std::string format_solution(const MultiGraph& g, const Solution& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.cost.size(); ++i) os << (i ? " " : "") << s.cost[i];
    os << " :";
    for (EdgeId e : s.edges) os << ' ' << g.edge(e).u + 1 << '-' << g.edge(e).v + 1;
    return os.str();
}

std::string csv_header() {
    return "instance,family,correlation,algorithm,n,m,d,status,solutions,iterations,transition_nodes,"
           "time_preprocess_s,time_solve_s,red_count,blue_count,reduced_n,reduced_m,max_frontier";
}

std::string csv_row(const RunRecord& r) {
    std::ostringstream os;
    os << r.instance << ',' << r.family << ',' << r.correlation << ',' << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.d << ','
       << r.status << ',' << r.solutions << ',' << r.iterations << ',' << r.transition_nodes << ','
       << std::setprecision(9) << r.time_preprocess_s << ',' << r.time_solve_s << ',' << r.red_count
       << ',' << r.blue_count << ',' << r.reduced_n << ',' << r.reduced_m << ',' << r.max_frontier;
    return os.str();
}

InstanceSpec parse_spec_line(std::string_view line) {
    InstanceSpec spec;
    std::istringstream in{std::string(line)};
    std::string field;
    bool has_rows = false;
    while (in >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw InstanceError(InstanceErrorKind::invalid_spec, "expected key=value, got '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        auto number = [&] {
            try {
                std::size_t used = 0;
                const unsigned long long v = std::stoull(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
                return static_cast<std::uint64_t>(v);
            } catch (const std::exception&) {
                throw InstanceError(InstanceErrorKind::invalid_spec, "bad number for " + key + ": " + value);
            }
        };
        if (key == "family") spec.family = parse_family(value);
        else if (key == "n") spec.n = number();
        else if (key == "rows") spec.rows = number(), has_rows = true;
        else if (key == "cols") spec.cols = number();
        else if (key == "i" || key == "edge_factor") spec.edge_factor = number();
        else if (key == "d") spec.dimension = number();
        else if (key == "correlation") spec.correlation = parse_correlation(value);
        else if (key == "seed") spec.seed = number();
        else if (key == "max_cost") spec.max_cost = static_cast<Cost>(number());
        else throw InstanceError(InstanceErrorKind::invalid_spec, "unknown key '" + key + "'");
    }
    if (spec.family == Family::grid && !has_rows)
        throw InstanceError(InstanceErrorKind::invalid_spec, "grid needs rows= and cols=");
    return spec;
}

void run_bench(const std::vector<BenchJob>& jobs, const std::vector<Algorithm>& algorithms,
               const RunOptions& base, std::size_t threads, std::ostream& csv) {
    const std::size_t total = jobs.size() * algorithms.size();
    std::vector<std::optional<RunRecord>> done(total);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < total;) {
            const BenchJob& job = jobs[k / algorithms.size()];
            RunOptions opts = base;
            opts.algorithm = algorithms[k % algorithms.size()];
            RunRecord rec;
            try {
                rec = run_instance(job.load(), job.instance, opts).record;
            } catch (const std::exception&) {
                rec = RunRecord{};
                rec.instance = job.instance;
                std::tie(rec.family, rec.correlation) = describe_instance(job.instance);
                rec.algorithm = to_string(opts.algorithm);
                rec.status = "error";
            }
            {
                std::lock_guard lock(mu);
                done[k] = std::move(rec);
            }
            cv.notify_one();
        }
    };

    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);

    csv << csv_header() << '\n' << std::flush;
    // Rows go out in job order as soon as every earlier row is finished.
    for (std::size_t written = 0; written < total; ++written) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done[written].has_value(); });
        const RunRecord rec = *done[written];
        lock.unlock();
        csv << csv_row(rec) << '\n' << std::flush;
    }
    for (auto& t : pool) t.join();
}

}  // namespace momst
