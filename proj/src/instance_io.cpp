#include "momst/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "momst/errors.hpp"

namespace momst {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

[[noreturn]] void syntax_error(const std::string& what, std::size_t line, std::size_t column) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    throw InstanceError(InstanceErrorKind::syntax, os.str(), line, column);
}

std::int64_t parse_int(const Token& t, std::size_t line) {
    std::int64_t value = 0;
    const char* end = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        syntax_error("expected an integer, got '" + std::string(t.text) + "'", line, t.column);
    return value;
}

}  // namespace

MultiGraph parse_instance(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < text.size();) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    if (lines.empty()) syntax_error("empty input, expected 'p momst' header", 1, 1);

    const auto header = split_tokens(lines[0]);
    if (header.size() != 6 || header[0].text != "p" || header[1].text != "momst")
        syntax_error("expected 'p momst <n> <m> <d> <root>'", 1, header.empty() ? 1 : header[0].column);
    const std::int64_t n = parse_int(header[2], 1);
    const std::int64_t m = parse_int(header[3], 1);
    const std::int64_t d = parse_int(header[4], 1);
    const std::int64_t root = parse_int(header[5], 1);
    if (n < 2 || n > static_cast<std::int64_t>(kMaxNodes))
        throw InstanceError(InstanceErrorKind::unsupported_size,
                            "node count must be in [2, 64], got " + std::to_string(n), 1, header[2].column);
    if (d < 1 || d > static_cast<std::int64_t>(kMaxDimension))
        throw InstanceError(InstanceErrorKind::unsupported_size,
                            "dimension must be in [1, 8], got " + std::to_string(d), 1, header[4].column);
    if (m < 0) syntax_error("negative edge count", 1, header[3].column);
    if (root < 1 || root > n) syntax_error("root out of range", 1, header[5].column);

    MultiGraph g(static_cast<std::size_t>(n), static_cast<std::size_t>(d), static_cast<NodeId>(root - 1));
    std::int64_t seen = 0;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        const auto tokens = split_tokens(lines[li]);
        if (tokens.empty() || tokens[0].text.front() == '#') continue;
        if (tokens[0].text != "e") syntax_error("expected an 'e' line", line_no, tokens[0].column);
        if (tokens.size() != static_cast<std::size_t>(d) + 3)
            syntax_error("expected 'e <u> <v>' and " + std::to_string(d) + " costs", line_no,
                         tokens.back().column);
        if (++seen > m) syntax_error("more edge lines than the declared " + std::to_string(m), line_no, 1);

        const std::int64_t u = parse_int(tokens[1], line_no);
        const std::int64_t v = parse_int(tokens[2], line_no);
        if (u < 1 || u > n) syntax_error("endpoint out of range", line_no, tokens[1].column);
        if (v < 1 || v > n) syntax_error("endpoint out of range", line_no, tokens[2].column);
        if (u == v) syntax_error("self-loop", line_no, tokens[2].column);
        CostVector cost(static_cast<std::size_t>(d));
        for (std::int64_t k = 0; k < d; ++k) {
            const Token& t = tokens[static_cast<std::size_t>(k) + 3];
            cost[static_cast<std::size_t>(k)] = parse_int(t, line_no);
            if (cost[static_cast<std::size_t>(k)] < 0)
                throw InstanceError(InstanceErrorKind::negative_cost, "negative cost", line_no, t.column);
        }
        g.add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), cost);
    }
    if (seen < m)
        syntax_error("expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen),
                     lines.size() + 1, 1);
    g.require_connected();
    return g;
}

MultiGraph read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const MultiGraph& g, std::string_view comment) {
    std::ostringstream os;
    os << "p momst " << g.node_count() << ' ' << g.edge_count() << ' ' << g.dimension() << ' '
       << g.root() + 1 << '\n';
    for (std::size_t pos = 0; pos < comment.size();) {
        std::size_t nl = comment.find('\n', pos);
        if (nl == std::string_view::npos) nl = comment.size();
        os << "# " << comment.substr(pos, nl - pos) << '\n';
        pos = nl + 1;
    }
    for (const Edge& e : g.edges()) {
        os << "e " << e.u + 1 << ' ' << e.v + 1;
        for (Cost c : e.cost) os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

void write_instance_file(const MultiGraph& g, const std::string& path, std::string_view comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_instance(g, comment);
}

const char* to_string(Family f) noexcept {
    switch (f) {
    case Family::complete: return "complete";
    case Family::grid: return "grid";
    case Family::random_sparse: return "random_sparse";
    }
    return "unknown";
}

const char* to_string(Correlation c) noexcept {
    switch (c) {
    case Correlation::uncorrelated: return "uncorrelated";
    case Correlation::correlated: return "correlated";
    case Correlation::anticorrelated: return "anticorrelated";
    }
    return "unknown";
}

Family parse_family(std::string_view s) {
    if (s == "complete") return Family::complete;
    if (s == "grid") return Family::grid;
    if (s == "random_sparse" || s == "random-sparse" || s == "sparse") return Family::random_sparse;
    throw InstanceError(InstanceErrorKind::invalid_spec, "unknown family '" + std::string(s) + "'");
}

Correlation parse_correlation(std::string_view s) {
    if (s == "uncorrelated" || s == "none") return Correlation::uncorrelated;
    if (s == "correlated" || s == "corr") return Correlation::correlated;
    if (s == "anticorrelated" || s == "anticorr" || s == "anti") return Correlation::anticorrelated;
    throw InstanceError(InstanceErrorKind::invalid_spec, "unknown correlation '" + std::string(s) + "'");
}

std::string instance_id(const InstanceSpec& spec) {
    std::ostringstream os;
    os << to_string(spec.family) << '-';
    if (spec.family == Family::grid)
        os << spec.rows << 'x' << spec.cols;
    else
        os << 'n' << spec.n;
    if (spec.family == Family::random_sparse) os << "-i" << spec.edge_factor;
    os << "-d" << spec.dimension << '-' << to_string(spec.correlation) << "-s" << spec.seed;
    return os.str();
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) noexcept {
    assert(lo <= hi);
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    // Reject the low 2^64 mod range values so every residue is equally likely.
    const std::uint64_t threshold = (0 - range) % range;
    std::uint64_t x = next();
    while (x < threshold) x = next();
    return lo + static_cast<std::int64_t>(x % range);
}

MultiGraph generate(const InstanceSpec& spec) {
    const std::size_t n = spec.node_count();
    if (n < 2 || n > kMaxNodes)
        throw InstanceError(InstanceErrorKind::unsupported_size,
                            "generated graphs need 2..64 nodes, got " + std::to_string(n));
    if (spec.max_cost < 0) throw InstanceError(InstanceErrorKind::invalid_spec, "negative cost range");

    SplitMix64 rng(spec.seed);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    switch (spec.family) {
    case Family::complete:
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        break;
    case Family::grid:
        for (std::size_t r = 0; r < spec.rows; ++r)
            for (std::size_t c = 0; c + 1 < spec.cols; ++c)
                pairs.emplace_back(r * spec.cols + c, r * spec.cols + c + 1);
        for (std::size_t r = 0; r + 1 < spec.rows; ++r)
            for (std::size_t c = 0; c < spec.cols; ++c)
                pairs.emplace_back(r * spec.cols + c, (r + 1) * spec.cols + c);
        break;
    case Family::random_sparse: {
        if (spec.edge_factor == 0)
            throw InstanceError(InstanceErrorKind::invalid_spec, "edge factor must be at least 1");
        const std::size_t m = spec.edge_factor * n;
        // Random recursive tree first, so the graph is connected.
        for (NodeId v = 1; v < n; ++v)
            pairs.emplace_back(static_cast<NodeId>(rng.uniform(0, v - 1)), v);
        while (pairs.size() < m) {
            const auto u = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
            auto v = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
            if (v >= u) ++v;
            pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
        break;
    }
    }

    const Cost top = spec.max_cost;
    const Cost noise = top / 10;
    MultiGraph g(n, spec.dimension, 0);
    for (const auto& [u, v] : pairs) {
        CostVector cost(spec.dimension);
        const Cost base = rng.uniform(0, top);
        cost[0] = base;
        for (std::size_t k = 1; k < spec.dimension; ++k) {
            switch (spec.correlation) {
            case Correlation::uncorrelated: cost[k] = rng.uniform(0, top); break;
            case Correlation::correlated:
                cost[k] = std::clamp<Cost>(base + rng.uniform(-noise, noise), 0, top);
                break;
            case Correlation::anticorrelated:
                cost[k] = std::clamp<Cost>(top - base + rng.uniform(-noise, noise), 0, top);
                break;
            }
        }
        g.add_edge(u, v, cost);
    }
    g.require_connected();
    return g;
}

}  // namespace momst
