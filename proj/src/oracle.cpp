#include "momst/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "momst/disjoint_sets.hpp"

namespace momst {

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: r * (n-k+i) is divisible by i at every step
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

TreeSet enumerate_spanning_trees(const MultiGraph& g) {
    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    const std::size_t k = n - 1;
    if (binomial_capped(m, k, kOracleMaxSubsets) > kOracleMaxSubsets)
        throw std::invalid_argument("too many edge subsets for brute-force enumeration");

    TreeSet out;
    if (k == 0) {
        out.trees.emplace_back();
        out.costs.emplace_back(g.dimension());
        return out;
    }
    if (m < k) return out;

    const auto edges = g.edges();
    std::vector<std::uint32_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<std::uint32_t>(i);

    for (;;) {
        DisjointSets sets(n);
        bool acyclic = true;
        for (std::uint32_t e : pick) {
            if (!sets.unite(edges[e].u, edges[e].v)) {
                acyclic = false;
                break;
            }
        }
        // n-1 edges without a cycle always span.
        if (acyclic) {
            std::vector<EdgeId> tree;
            CostVector cost(g.dimension());
            for (std::uint32_t e : pick) {
                tree.emplace_back(e);
                cost += edges[e].cost;
            }
            out.trees.push_back(std::move(tree));
            out.costs.push_back(cost);
        }

        // Next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<CostVector> pareto_filter(std::vector<CostVector> costs) {
    // After a lex sort only earlier vectors can dominate or equal later ones.
    std::sort(costs.begin(), costs.end(),
              [](const CostVector& a, const CostVector& b) { return lex_less(a, b); });
    std::vector<CostVector> out;
    for (const CostVector& c : costs) {
        const bool covered = std::any_of(out.begin(), out.end(),
                                         [&](const CostVector& kept) { return dominates_or_equal(kept, c); });
        if (!covered) out.push_back(c);
    }
    return out;
}

std::vector<CostVector> oracle_frontier(const MultiGraph& g) {
    return pareto_filter(enumerate_spanning_trees(g).costs);
}

}  // namespace momst
