#pragma once

#include <algorithm>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"
#include "momst/instance_io.hpp"
#include "momst/solve.hpp"

namespace momst::testing {

// Triangle s=0, u=1, w=2 rooted at s: [s,u] (3,3), [s,w] (1,1), [u,w] (2,1).
inline MultiGraph triangle() {
    MultiGraph g(3, 2, 0);
    g.add_edge(0, 1, {3, 3});
    g.add_edge(0, 2, {1, 1});
    g.add_edge(1, 2, {2, 1});
    return g;
}

inline MultiGraph complete_graph(std::size_t n, const CostVector& cost) {
    MultiGraph g(n, cost.size(), 0);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v, cost);
    return g;
}

inline std::vector<CostVector> sorted_costs(const std::vector<Solution>& sols) {
    std::vector<CostVector> out;
    for (const Solution& s : sols) out.push_back(s.cost);
    std::sort(out.begin(), out.end(), [](const CostVector& a, const CostVector& b) { return lex_less(a, b); });
    return out;
}

// 300 seeded instances: n in 4..8, all three families and correlation modes,
// d in 1..4. Every fourth instance draws costs from [0,3] to force ties.
inline std::vector<InstanceSpec> fuzz_suite(std::size_t count = 300) {
    static constexpr std::size_t grid_shapes[][2] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
    std::vector<InstanceSpec> out;
    for (std::size_t i = 0; i < count; ++i) {
        InstanceSpec s;
        s.family = static_cast<Family>(i % 3);
        s.correlation = static_cast<Correlation>((i / 3) % 3);
        s.dimension = 1 + (i / 9) % 4;
        s.n = 4 + (i / 2) % 5;
        s.rows = grid_shapes[(i / 2) % 5][0];
        s.cols = grid_shapes[(i / 2) % 5][1];
        s.edge_factor = 2 + (i / 5) % 2;
        s.seed = 1000 + i;
        s.max_cost = i % 4 == 3 ? 3 : 100;
        out.push_back(s);
    }
    return out;
}

}  // namespace momst::testing
