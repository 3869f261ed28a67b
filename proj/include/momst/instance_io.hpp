#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "momst/graph.hpp"

namespace momst {

// Instance text format, 1-indexed nodes:
//
//   p momst <n> <m> <d> <root>
//   # optional comment lines
//   e <u> <v> <c1> ... <cd>      (m lines)
//
// Throws InstanceError: syntax (with line/column), unsupported_size (n > 64
// or d > 8), negative_cost, disconnected.
MultiGraph parse_instance(std::string_view text);
MultiGraph read_instance_file(const std::string& path);

// Writes the format above; `comment` lines are emitted as "# ..." after the
// header.
std::string serialize_instance(const MultiGraph& g, std::string_view comment = {});
void write_instance_file(const MultiGraph& g, const std::string& path, std::string_view comment = {});

enum class Family { complete, grid, random_sparse };
enum class Correlation { uncorrelated, correlated, anticorrelated };

const char* to_string(Family f) noexcept;
const char* to_string(Correlation c) noexcept;
Family parse_family(std::string_view s);
Correlation parse_correlation(std::string_view s);

struct InstanceSpec {
    Family family = Family::complete;
    std::size_t n = 5;           // complete and random_sparse
    std::size_t rows = 0;        // grid
    std::size_t cols = 0;        // grid
    std::size_t edge_factor = 5; // random_sparse: m = edge_factor * n
    std::size_t dimension = 3;
    Correlation correlation = Correlation::uncorrelated;
    std::uint64_t seed = 1;
    Cost max_cost = 100;         // costs drawn from [0, max_cost]

    std::size_t node_count() const noexcept { return family == Family::grid ? rows * cols : n; }
};

// Stable identifier such as "complete-n5-d3-uncorrelated-s1".
std::string instance_id(const InstanceSpec& spec);

// Deterministic in the seed. Node 0 is the root. Throws
// InstanceError(invalid_spec / unsupported_size) for impossible specs.
MultiGraph generate(const InstanceSpec& spec);

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15 then the
// 64-bit finalizer. Uniform integers use rejection sampling so the stream is
// identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept;

    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept;

    // Independent stream derived from this one.
    SplitMix64 split() noexcept { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace momst
