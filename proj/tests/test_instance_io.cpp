#include <doctest.h>

#include <cmath>

#include "momst/errors.hpp"
#include "momst/instance_io.hpp"
#include "support.hpp"

using namespace momst;

namespace {

InstanceErrorKind error_kind(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const InstanceError& e) {
        return e.kind();
    }
    FAIL("no error for: " << text);
    return InstanceErrorKind::syntax;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i] / n, my += y[i] / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

bool same_graph(const MultiGraph& a, const MultiGraph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() || a.dimension() != b.dimension() ||
        a.root() != b.root())
        return false;
    for (std::size_t i = 0; i < a.edge_count(); ++i) {
        const Edge& x = a.edges()[i];
        const Edge& y = b.edges()[i];
        if (x.u != y.u || x.v != y.v || !(x.cost == y.cost)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parse the triangle") {
    const MultiGraph g = parse_instance("p momst 3 3 2 1\n# triangle\ne 1 2 3 3\ne 1 3 1 1\ne 2 3 2 1\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.dimension() == 2);
    CHECK(g.root() == 0);
    CHECK(same_graph(g, momst::testing::triangle()));
}

TEST_CASE("parse errors") {
    CHECK(error_kind("p momst 3 3 2 1\ne 1 2 3 3\ne 1 3 1 1\n") == InstanceErrorKind::syntax);
    CHECK(error_kind("p momst 3 1 2 1\ne 1 2 3 3\ne 1 3 1 1\n") == InstanceErrorKind::syntax);
    CHECK(error_kind("") == InstanceErrorKind::syntax);
    CHECK(error_kind("e 1 2 3 3\n") == InstanceErrorKind::syntax);
    CHECK(error_kind("p momst 3 2 2 1\ne 1 2 3 x\ne 1 3 1 1\n") == InstanceErrorKind::syntax);
    CHECK(error_kind("p momst 3 2 2 1\ne 1 2 3\ne 1 3 1 1\n") == InstanceErrorKind::syntax);
    CHECK(error_kind("p momst 3 2 2 1\ne 1 1 3 3\ne 1 3 1 1\n") == InstanceErrorKind::syntax);
    CHECK(error_kind("p momst 3 2 2 1\ne 1 4 3 3\ne 1 3 1 1\n") == InstanceErrorKind::syntax);
    CHECK(error_kind("p momst 65 0 2 1\n") == InstanceErrorKind::unsupported_size);
    CHECK(error_kind("p momst 3 0 9 1\n") == InstanceErrorKind::unsupported_size);
    CHECK(error_kind("p momst 3 2 2 1\ne 1 2 -3 3\ne 1 3 1 1\n") == InstanceErrorKind::negative_cost);
    CHECK(error_kind("p momst 3 1 2 1\ne 1 2 3 3\n") == InstanceErrorKind::disconnected);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_instance("p momst 2 1 2 1\n\ne 1 2 3 y\n");
        FAIL("expected an exception");
    } catch (const InstanceError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 9);
    }
}

TEST_CASE("duplicate edge lines are parallel edges") {
    const MultiGraph g = parse_instance("p momst 2 2 1 2\r\ne 1 2 4\r\ne 1 2 4\r\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.root() == 1);
}

TEST_CASE("serialize round trip") {
    for (const InstanceSpec& spec : momst::testing::fuzz_suite(30)) {
        const MultiGraph g = generate(spec);
        const std::string text = serialize_instance(g, instance_id(spec) + "\nsecond line");
        CHECK(same_graph(parse_instance(text), g));
    }
}

TEST_CASE("generator is deterministic") {
    InstanceSpec spec;
    spec.n = 5;
    spec.dimension = 3;
    spec.seed = 1;
    CHECK(serialize_instance(generate(spec)) == serialize_instance(generate(spec)));
    InstanceSpec other = spec;
    other.seed = 2;
    CHECK(serialize_instance(generate(spec)) != serialize_instance(generate(other)));
    CHECK(instance_id(spec) == "complete-n5-d3-uncorrelated-s1");
}

TEST_CASE("generator sizes") {
    InstanceSpec grid;
    grid.family = Family::grid;
    grid.rows = 3;
    grid.cols = 3;
    const MultiGraph g = generate(grid);
    CHECK(g.node_count() == 9);
    CHECK(g.edge_count() == 12);

    InstanceSpec sparse;
    sparse.family = Family::random_sparse;
    sparse.n = 10;
    sparse.edge_factor = 5;
    CHECK(generate(sparse).edge_count() == 50);
    CHECK(generate(sparse).is_connected());

    InstanceSpec complete;
    complete.n = 7;
    CHECK(generate(complete).edge_count() == 21);

    InstanceSpec too_big;
    too_big.n = 65;
    CHECK_THROWS_AS(generate(too_big), InstanceError);
}

TEST_CASE("costs stay in range and follow the correlation mode") {
    for (Correlation mode : {Correlation::correlated, Correlation::anticorrelated, Correlation::uncorrelated}) {
        InstanceSpec spec;
        spec.family = Family::random_sparse;
        spec.n = 20;
        spec.edge_factor = 5;
        spec.dimension = 3;
        spec.correlation = mode;
        spec.seed = 11;
        const MultiGraph g = generate(spec);
        std::vector<double> first, other1, other2;
        for (const Edge& e : g.edges()) {
            for (Cost c : e.cost) {
                CHECK(c >= 0);
                CHECK(c <= 100);
            }
            first.push_back(static_cast<double>(e.cost[0]));
            other1.push_back(static_cast<double>(e.cost[1]));
            other2.push_back(static_cast<double>(e.cost[2]));
        }
        const double r1 = pearson(first, other1);
        const double r2 = pearson(first, other2);
        if (mode == Correlation::correlated) {
            CHECK(r1 > 0.5);
            CHECK(r2 > 0.5);
        } else if (mode == Correlation::anticorrelated) {
            CHECK(r1 < -0.5);
            CHECK(r2 < -0.5);
        } else {
            CHECK(std::abs(r1) < 0.5);
        }
    }
}

TEST_CASE("splitmix64 reference values") {
    // First outputs for seed 1234567, from the reference implementation.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    SplitMix64 bounded(5);
    for (int i = 0; i < 1000; ++i) {
        const auto x = bounded.uniform(-3, 3);
        CHECK(x >= -3);
        CHECK(x <= 3);
    }
}
