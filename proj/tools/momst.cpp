// momst: solve, benchmark, generate and inspect MO-MST instances.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momst/bench.hpp"
#include "momst/errors.hpp"
#include "momst/instance_io.hpp"
#include "momst/oracle.hpp"
#include "momst/preprocess.hpp"
#include "momst/transition.hpp"

namespace fs = std::filesystem;
using namespace momst;

namespace {

constexpr int kExitUsage = 64;

int exit_code(SolveStatus s) {
    switch (s) {
    case SolveStatus::solved: return 0;
    case SolveStatus::timeout: return 2;
    case SolveStatus::memout: return 3;
    }
    return 1;
}

struct LimitFlags {
    bool no_preprocess = false;
    bool no_prune = false;
    std::string sort = "lex";
    double time_limit = 0.0;   // seconds, 0 = none
    double mem_limit_mb = 0.0; // 0 = none

    void attach(CLI::App* cmd) {
        cmd->add_flag("--no-preprocess", no_preprocess, "Skip red/blue edge reduction");
        cmd->add_flag("--no-prune", no_prune, "IG-MDA: keep every cut edge as a transition arc");
        cmd->add_option("--sort", sort, "BN queue order")->check(CLI::IsMember({"lex", "sum"}));
        cmd->add_option("--time-limit", time_limit, "Solver time limit in seconds")->check(CLI::NonNegativeNumber);
        cmd->add_option("--mem-limit", mem_limit_mb, "Solver memory limit in MB")->check(CLI::NonNegativeNumber);
    }

    RunOptions options(Algorithm algo) const {
        RunOptions o;
        o.algorithm = algo;
        o.preprocess = !no_preprocess;
        o.solve.pruning = no_prune ? Pruning::none : Pruning::cut_star;
        o.solve.order = sort == "sum" ? QueueOrder::sum : QueueOrder::lex;
        if (time_limit > 0) o.solve.time_limit_s = time_limit;
        if (mem_limit_mb > 0) o.solve.memory_limit_bytes = static_cast<std::size_t>(mem_limit_mb * 1024 * 1024);
        return o;
    }
};

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

int cmd_solve(const std::string& path, const std::string& algo, const LimitFlags& flags,
              const std::string& out_path) {
    const MultiGraph g = read_instance_file(path);
    RunOptions opts = flags.options(parse_algorithm(algo));
    if (opts.algorithm == Algorithm::igmda && opts.solve.order == QueueOrder::sum)
        throw CLI::ValidationError("--sort", "sum order is only available for bn");
    const RunOutput out = run_instance(g, stem_of(path), opts);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    for (const Solution& s : out.solutions) os << format_solution(g, s) << '\n';

    const RunRecord& r = out.record;
    std::cerr << "status=" << r.status << " solutions=" << r.solutions << " iterations=" << r.iterations
              << " transition_nodes=" << r.transition_nodes << " red=" << r.red_count << " blue=" << r.blue_count
              << " time_preprocess_s=" << r.time_preprocess_s << " time_solve_s=" << r.time_solve_s << '\n';
    return exit_code(out.status);
}

std::vector<BenchJob> collect_jobs(const std::vector<std::string>& inputs, const std::string& specs_path) {
    std::vector<BenchJob> jobs;
    for (const std::string& in : inputs) {
        std::vector<std::string> files;
        if (fs::is_directory(in)) {
            for (const auto& entry : fs::directory_iterator(in))
                if (entry.is_regular_file() && entry.path().extension() == ".momst") files.push_back(entry.path().string());
            std::sort(files.begin(), files.end());
        } else {
            files.push_back(in);
        }
        for (const std::string& f : files) jobs.push_back({stem_of(f), [f] { return read_instance_file(f); }});
    }
    if (!specs_path.empty()) {
        std::ifstream specs(specs_path);
        if (!specs) throw std::runtime_error("cannot open " + specs_path);
        std::string line;
        while (std::getline(specs, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            const InstanceSpec spec = parse_spec_line(line);
            jobs.push_back({instance_id(spec), [spec] { return generate(spec); }});
        }
    }
    return jobs;
}

int cmd_bench(const std::vector<std::string>& inputs, const std::string& specs_path, const std::string& algos,
              const LimitFlags& flags, const std::string& out_path) {
    std::vector<Algorithm> algorithms;
    std::stringstream list(algos);
    for (std::string a; std::getline(list, a, ',');) algorithms.push_back(parse_algorithm(a));
    if (algorithms.empty()) throw CLI::ValidationError("--algos", "no algorithm given");

    const auto jobs = collect_jobs(inputs, specs_path);
    if (jobs.empty()) throw CLI::ValidationError("bench", "no instances given");

    std::size_t threads = 1;
    if (const char* env = std::getenv("MOMST_THREADS")) {
        try {
            threads = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw CLI::ValidationError("MOMST_THREADS", std::string("not a number: ") + env);
        }
    }

    const RunOptions base = flags.options(Algorithm::igmda);
    if (out_path.empty()) {
        run_bench(jobs, algorithms, base, threads, std::cout);
    } else {
        std::ofstream csv(out_path);
        if (!csv) throw std::runtime_error("cannot write " + out_path);
        run_bench(jobs, algorithms, base, threads, csv);
    }
    return 0;
}

int cmd_oracle(const std::string& path) {
    const auto front = oracle_frontier(read_instance_file(path));
    std::cout << '{';
    for (std::size_t i = 0; i < front.size(); ++i) std::cout << (i ? "," : "") << front[i];
    std::cout << "}\n";
    return 0;
}

int cmd_inspect(const std::string& path, bool explicit_graph_size, bool prune) {
    const MultiGraph g = read_instance_file(path);
    if (explicit_graph_size) {
        const auto size = explicit_graph(g, prune ? Pruning::cut_star : Pruning::none);
        std::cout << "nodes=" << size.nodes << " arcs=" << size.arcs << '\n';
        return 0;
    }
    const Reduction r = reduce(g);
    std::cout << "n=" << g.node_count() << " m=" << g.edge_count() << " d=" << g.dimension()
              << " root=" << g.root() + 1 << " red=" << r.red_count << " blue=" << r.blue_count
              << " reduced_n=" << r.reduced_graph.node_count() << " reduced_m=" << r.reduced_graph.edge_count()
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiobjective minimum spanning trees: IG-MDA and BN solvers"};
    app.require_subcommand(1);

    std::string path, algo = "igmda", out;
    LimitFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "Solve one instance and print every efficient cost vector");
    solve->add_option("file", path, "Instance file")->required();
    solve->add_option("--algo", algo, "Solver")->check(CLI::IsMember({"igmda", "bn"}));
    solve->add_option("--out", out, "Write solutions here instead of stdout");
    solve_flags.attach(solve);

    std::vector<std::string> inputs;
    std::string specs, algos = "igmda,bn", csv_out;
    LimitFlags bench_flags;
    auto* bench = app.add_subcommand("bench", "Run instances under several solvers and write CSV rows");
    bench->add_option("inputs", inputs, "Instance files or directories of *.momst files");
    bench->add_option("--specs", specs, "File of generator specs, one per line")->check(CLI::ExistingFile);
    bench->add_option("--algos", algos, "Comma-separated solvers");
    bench->add_option("--out", csv_out, "CSV output file (default stdout)");
    bench_flags.attach(bench);

    InstanceSpec spec;
    std::string family = "complete", correlation = "uncorrelated", gen_out;
    auto* gen = app.add_subcommand("generate", "Write a seeded random instance");
    gen->add_option("--family", family)->check(CLI::IsMember({"complete", "grid", "random_sparse"}));
    gen->add_option("--n", spec.n, "Nodes (complete, random_sparse)");
    gen->add_option("--rows", spec.rows, "Grid rows");
    gen->add_option("--cols", spec.cols, "Grid columns");
    gen->add_option("--edge-factor,-i", spec.edge_factor, "random_sparse: m = i * n");
    gen->add_option("--d", spec.dimension, "Cost dimension");
    gen->add_option("--correlation", correlation)
        ->check(CLI::IsMember({"uncorrelated", "correlated", "anticorrelated"}));
    gen->add_option("--seed", spec.seed);
    gen->add_option("--max-cost", spec.max_cost, "Costs are drawn from [0, max-cost]");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "Brute-force nondominated set of a small instance");
    oracle->add_option("file", path, "Instance file")->required();

    bool explicit_size = false, prune = false;
    auto* inspect = app.add_subcommand("inspect", "Instance summary or explicit transition graph size");
    inspect->add_option("file", path, "Instance file")->required();
    inspect->add_flag("--explicit", explicit_size, "Count transition nodes and arcs (n <= 20)");
    inspect->add_flag("--prune", prune, "With --explicit: keep only nondominated cut arcs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(path, algo, solve_flags, out);
        if (*bench) return cmd_bench(inputs, specs, algos, bench_flags, csv_out);
        if (*gen) {
            spec.family = parse_family(family);
            spec.correlation = parse_correlation(correlation);
            const MultiGraph g = generate(spec);
            const std::string comment = instance_id(spec) + "\ngenerator splitmix64 seed " + std::to_string(spec.seed);
            if (gen_out.empty()) std::cout << serialize_instance(g, comment);
            else write_instance_file(g, gen_out, comment);
            return 0;
        }
        if (*oracle) return cmd_oracle(path);
        if (*inspect) return cmd_inspect(path, explicit_size, prune);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "momst: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InstanceError& e) {
        std::cerr << "momst: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "momst: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
