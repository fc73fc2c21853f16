#include <doctest.h>

#include <set>

#include "crosscut/crossing.hpp"
#include "crosscut/errors.hpp"
#include "crosscut/generator.hpp"

using namespace crosscut;

namespace {

WeightedGraph complete(int n) {
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) edges.push_back({a, b, BigInt(1)});
    return WeightedGraph::simple(n, edges);
}

EdgeId eid(const WeightedGraph& g, NodeId u, NodeId v) { return g.find_edge(u, v); }

// K5 with its single crossing between the independent edges (0,2) and (1,3)
std::pair<WeightedGraph, CrossingConfiguration> k5_one_crossing() {
    WeightedGraph g = complete(5);
    CrossingConfiguration x = CrossingConfiguration::of(
        {{0, eid(g, 0, 2), eid(g, 1, 3)}}, {});
    return {g, x};
}

}  // namespace

TEST_CASE("planarize with no crossings is the graph itself") {
    WeightedGraph g = complete(4);
    Planarization p = planarize(g, CrossingConfiguration());
    CHECK(p.node_count == 4);
    CHECK(p.edges.size() == 6);
    for (const SkeletonEdge& e : p.edges) CHECK(p.crossing_of_node[e.u] == -1);
}

TEST_CASE("planarize K5 with one crossing") {
    auto [g, x] = k5_one_crossing();
    Planarization p = planarize(g, x);
    CHECK(p.node_count == 6);
    CHECK(p.edges.size() == 12);  // |E| + 2k
    NodeId d = p.dummy_node(0);
    int deg = 0;
    for (const SkeletonEdge& e : p.edges)
        if (e.u == d || e.v == d) ++deg;
    CHECK(deg == 4);
    CHECK(p.crossing_of_node[d] == 0);
}

TEST_CASE("planarize threads an edge through its crossings in order") {
    // edge (0,1) crossed by (2,3) then (4,5)
    WeightedGraph g = WeightedGraph::simple(
        6, {{0, 1, BigInt(1)}, {2, 3, BigInt(1)}, {4, 5, BigInt(1)}});
    CrossingConfiguration x =
        CrossingConfiguration::of({{0, 0, 1}, {1, 0, 2}}, {{0, {0, 1}}});
    Planarization p = planarize(g, x);
    CHECK(p.node_count == 8);
    const auto& segs = p.segments_of_edge[0];
    REQUIRE(segs.size() == 3);
    CHECK(p.edges[segs[0]].u == 0);
    CHECK(p.edges[segs[0]].v == p.dummy_node(0));
    CHECK(p.edges[segs[1]].u == p.dummy_node(0));
    CHECK(p.edges[segs[1]].v == p.dummy_node(1));
    CHECK(p.edges[segs[2]].v == 1);
    // contraction round trip: chained segments recover each original edge
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& s = p.segments_of_edge[e];
        CHECK(p.edges[s.front()].u == g.edge(e).low());
        CHECK(p.edges[s.back()].v == g.edge(e).high());
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            CHECK(p.edges[s[i]].v == p.edges[s[i + 1]].u);
    }
}

TEST_CASE("planarize rejects structural inconsistency") {
    WeightedGraph g = complete(4);
    CHECK_THROWS_AS(
        planarize(g, CrossingConfiguration::of({{0, 0, 99}}, {})), ConfigError);
    // order list naming a foreign crossing
    CHECK_THROWS_AS(CrossingConfiguration::of({{0, 0, 5}}, {{0, {7}}}), ConfigError);
    // two crossings on one edge but no order
    CHECK_THROWS_AS(CrossingConfiguration::of({{0, 0, 5}, {1, 0, 4}}, {}), ConfigError);
}

TEST_CASE("validate: K5 with its crossing is feasible") {
    auto [g, x] = k5_one_crossing();
    ValidationResult r = validate(g, x);
    REQUIRE(std::holds_alternative<Feasible>(r));
    const Feasible& f = std::get<Feasible>(r);
    CHECK(f.planarization.node_count == g.node_count() + 1);
    CHECK(static_cast<int>(f.planarization.edges.size()) == g.edge_count() + 2);
    // idempotent: validating the same configuration again stays feasible
    CHECK(std::holds_alternative<Feasible>(validate(g, x)));
}

TEST_CASE("validate: K5 with no crossings is infeasible") {
    WeightedGraph g = complete(5);
    CHECK(std::holds_alternative<Infeasible>(validate(g, CrossingConfiguration())));
}

TEST_CASE("validate: a forced touch is reduced") {
    // 6-cycle 0,2,5,3,1,4 with chords (0,1) and (2,3); the declared crossing
    // of the chords cannot alternate in any embedding (they nest)
    std::vector<Edge> edges = {
        {0, 1, BigInt(1)},  // e0: chord a-b
        {2, 3, BigInt(1)},  // e1: chord c-d
        {0, 2, BigInt(1)}, {2, 5, BigInt(1)}, {5, 3, BigInt(1)},
        {3, 1, BigInt(1)}, {1, 4, BigInt(1)}, {4, 0, BigInt(1)}};
    WeightedGraph g = WeightedGraph::simple(6, edges);
    CrossingConfiguration x = CrossingConfiguration::of({{7, 0, 1}}, {});
    ValidationResult r = validate(g, x);
    REQUIRE(std::holds_alternative<Reduced>(r));
    const Reduced& red = std::get<Reduced>(r);
    CHECK(red.removed_crossing == 7);
    CHECK(red.config.k() == 0);
    CHECK(std::holds_alternative<Feasible>(validate(g, red.config)));
}

TEST_CASE("is_good") {
    WeightedGraph g = complete(4);
    CHECK(is_good(g, CrossingConfiguration()));
    // adjacent edges (0,1) and (0,2)
    CrossingConfiguration adj =
        CrossingConfiguration::of({{0, eid(g, 0, 1), eid(g, 0, 2)}}, {});
    CHECK(!is_good(g, adj));
    // the same independent pair twice
    CrossingConfiguration twice = CrossingConfiguration::of(
        {{0, eid(g, 0, 1), eid(g, 2, 3)}, {1, eid(g, 0, 1), eid(g, 2, 3)}},
        {{eid(g, 0, 1), {0, 1}}, {eid(g, 2, 3), {0, 1}}});
    CHECK(!is_good(g, twice));
}

TEST_CASE("validate tolerates non-good configurations structurally") {
    // adjacent crossing edges make the planarization a multigraph; validate
    // must still reach a verdict (the solver rejects such inputs separately)
    WeightedGraph g = complete(4);
    CrossingConfiguration adj =
        CrossingConfiguration::of({{0, eid(g, 0, 1), eid(g, 0, 2)}}, {});
    CHECK(!is_good(g, adj));
    ValidationResult r = validate(g, adj);  // no crash, any verdict
    CHECK((std::holds_alternative<Feasible>(r) || std::holds_alternative<Reduced>(r) ||
           std::holds_alternative<Infeasible>(r)));
}

TEST_CASE("generated instances validate feasible and good") {
    Rng rng(55);
    int with_crossings = 0;
    int multi = 0;
    for (int t = 0; t < 60; ++t) {
        CrossingInstance inst = random_crossing_instance(rng, 12, 4, -9, 9);
        CHECK(is_good(inst.graph, inst.config));
        ValidationResult r = validate(inst.graph, inst.config);
        CHECK(std::holds_alternative<Feasible>(r));
        if (inst.config.k() > 0) ++with_crossings;
        for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
            if (inst.config.order_of(e).size() >= 2) ++multi;
    }
    CHECK(with_crossings >= 50);  // the generator must actually produce crossings
    CHECK(multi >= 1);            // and some multi-crossing edges
}

TEST_CASE("reduced chains terminate within k steps") {
    Rng rng(65);
    for (int t = 0; t < 25; ++t) {
        CrossingInstance inst = random_crossing_instance(rng, 10, 3, -5, 5);
        CrossingConfiguration cfg = inst.config;
        int steps = 0;
        for (;;) {
            ValidationResult r = validate(inst.graph, cfg);
            if (auto* red = std::get_if<Reduced>(&r)) {
                cfg = red->config;
                ++steps;
                CHECK(steps <= inst.config.k());
                continue;
            }
            break;
        }
    }
}
