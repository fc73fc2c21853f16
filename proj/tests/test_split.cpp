#include <doctest.h>

#include <algorithm>

#include "crosscut/errors.hpp"
#include "crosscut/generator.hpp"
#include "crosscut/oracle.hpp"
#include "crosscut/split.hpp"

using namespace crosscut;

namespace {

WeightedGraph complete(int n) {
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) edges.push_back({a, b, BigInt(1)});
    return WeightedGraph::simple(n, edges);
}

Triplet k5_triplet() {
    WeightedGraph g = complete(5);
    CrossingConfiguration x = CrossingConfiguration::of(
        {{0, g.find_edge(0, 2), g.find_edge(1, 3)}}, {});
    return Triplet{PFInstance::of(g, {}), x, {}};
}

}  // namespace

TEST_CASE("bisubdivide replaces an edge by a forced path") {
    WeightedGraph g = WeightedGraph::simple(2, {{0, 1, BigInt(5)}});
    PFInstance inst = PFInstance::of(g, {});
    BisubdivideResult r = bisubdivide(inst, 0, 0);
    CHECK(r.instance.graph.node_count() == 4);
    CHECK(r.instance.graph.edge_count() == 3);
    CHECK(r.instance.graph.edge(r.edge_v_vbar).weight.is_zero());
    CHECK(r.instance.graph.edge(r.edge_vbar_wbar).weight.is_zero());
    CHECK(r.instance.graph.edge(r.edge_wbar_w).weight.to_int64() == 5);
    CHECK(r.instance.fixed == std::vector<EdgeId>{1, 2});
    CHECK(r.vbar == 2);
    CHECK(r.wbar == 3);
}

TEST_CASE("bisubdivide keeps a fixed edge fixed through its replacement") {
    WeightedGraph g = WeightedGraph::simple(2, {{0, 1, BigInt(5)}});
    PFInstance inst = PFInstance::of(g, {0});
    BisubdivideResult r = bisubdivide(inst, 0, 0);
    // the weight-carrying edge keeps id 0 and stays in F
    CHECK(r.instance.fixed == std::vector<EdgeId>{0, 1, 2});
    CHECK(r.instance.graph.edge(0).weight.to_int64() == 5);
}

TEST_CASE("bisubdivide errors") {
    WeightedGraph g = WeightedGraph::simple(3, {{0, 1, BigInt(1)}, {1, 2, BigInt(2)}});
    PFInstance inst = PFInstance::of(g, {});
    CHECK_THROWS_AS(bisubdivide(inst, 9, 0), PreconditionError);
    CHECK_THROWS_AS(bisubdivide(inst, 0, 2), PreconditionError);
}

TEST_CASE("bisubdivision preserves feasible cut values (both F cases)") {
    Rng rng(19);
    for (int t = 0; t < 120; ++t) {
        WeightedGraph g = random_connected_planar(rng, rand_int(rng, 2, 8), 2, -6, 6);
        std::vector<EdgeId> fixed;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (rng() % 4 == 0) fixed.push_back(e);
        PFInstance inst = PFInstance::of(g, fixed);
        EdgeId e = static_cast<EdgeId>(rng() % g.edge_count());
        NodeId anchor = rng() % 2 ? g.edge(e).u : g.edge(e).v;
        BisubdivideResult r = bisubdivide(inst, e, anchor);
        CHECK(feasible_cut_values(inst) == feasible_cut_values(r.instance));
    }
}

TEST_CASE("identify merges neighborhoods") {
    // two pendant nodes hanging off a path merge into a degree-2 node
    WeightedGraph g = WeightedGraph::simple(
        4, {{0, 1, BigInt(1)}, {1, 2, BigInt(1)}, {2, 3, BigInt(1)}});
    PFInstance inst = PFInstance::of(g, {});
    IdentifyResult r = identify(inst, 0, 3);
    CHECK(r.instance.graph.node_count() == 3);
    CHECK(r.instance.graph.degree(r.merged_node) == 2);
}

TEST_CASE("identify rewrites fixed edges to the merged node") {
    WeightedGraph g = WeightedGraph::simple(
        4, {{0, 1, BigInt(1)}, {1, 2, BigInt(1)}, {2, 3, BigInt(1)}});
    PFInstance inst = PFInstance::of(g, {0});  // fixed edge (0,1)
    IdentifyResult r = identify(inst, 0, 3);
    CHECK(r.instance.fixed == std::vector<EdgeId>{0});
    const Edge& f = r.instance.graph.edge(0);
    CHECK((f.u == r.merged_node || f.v == r.merged_node));
}

TEST_CASE("identify preconditions") {
    WeightedGraph g = complete(3);
    PFInstance inst = PFInstance::of(g, {});
    CHECK_THROWS_AS(identify(inst, 0, 1), PreconditionError);  // adjacent
    WeightedGraph path = WeightedGraph::simple(
        3, {{0, 1, BigInt(1)}, {1, 2, BigInt(1)}});
    CHECK_THROWS_AS(identify(PFInstance::of(path, {}), 0, 2),
                    PreconditionError);  // share neighbor 1
    CHECK_THROWS_AS(identify(inst, 1, 1), PreconditionError);
}

TEST_CASE("crossing split on K5 produces planar feasible children") {
    Triplet t = k5_triplet();
    auto [tv, tw] = crossing_split(t, 0);
    for (const Triplet* child : {&tv, &tw}) {
        CHECK(child->instance.graph.node_count() == 8);   // +3 nodes
        CHECK(child->instance.graph.edge_count() == 14);  // +4 edges
        CHECK(child->instance.fixed.size() == 4);
        for (EdgeId f : child->instance.fixed)
            CHECK(child->instance.graph.edge(f).weight.is_zero());
        CHECK(child->config.k() == 0);
        CHECK(planar_embedding(child->instance.graph).has_value());
        CHECK(std::holds_alternative<Feasible>(
            validate(child->instance.graph, child->config)));
    }
    // T_v forces v,x together; T_w apart (via the brute-force PF optimum)
    SolveResult parent = brute_force_pf(t.instance);
    SolveResult rv = brute_force_pf(tv.instance);
    SolveResult rw = brute_force_pf(tw.instance);
    REQUIRE(parent.feasible());
    BigInt best = rv.feasible() && (!rw.feasible() || rv.value >= rw.value)
                      ? rv.value
                      : rw.value;
    CHECK(parent.value == best);
}

TEST_CASE("crossing split rejects non-good crossings") {
    WeightedGraph g = complete(4);
    CrossingConfiguration adj = CrossingConfiguration::of(
        {{0, g.find_edge(0, 1), g.find_edge(0, 2)}}, {});
    Triplet t{PFInstance::of(g, {}), adj, {}};
    CHECK_THROWS_AS(crossing_split(t, 0), NonGoodError);
    CHECK_THROWS_AS(crossing_split(k5_triplet(), 12), PreconditionError);
}

TEST_CASE("split children validate feasible with fewer crossings") {
    Rng rng(73);
    for (int t = 0; t < 40; ++t) {
        CrossingInstance inst = random_crossing_instance(rng, 10, 3, -5, 5);
        if (inst.config.k() == 0) continue;
        Triplet root{PFInstance::of(inst.graph, {}), inst.config, {}};
        int chi = inst.config.crossings()[rng() % inst.config.k()].id;
        auto [tv, tw] = crossing_split(root, chi);
        for (const Triplet* child : {&tv, &tw}) {
            CHECK(child->config.k() == inst.config.k() - 1);
            CHECK(child->instance.graph.node_count() == inst.graph.node_count() + 3);
            CHECK(child->instance.graph.edge_count() == inst.graph.edge_count() + 4);
            CHECK(std::holds_alternative<Feasible>(
                validate(child->instance.graph, child->config)));
        }
    }
}

TEST_CASE("split preserves the PF optimum (two levels deep)") {
    Rng rng(81);
    int checked = 0;
    for (int t = 0; t < 60 && checked < 25; ++t) {
        CrossingInstance inst = random_crossing_instance(rng, 9, 2, -5, 5);
        if (inst.config.k() == 0) continue;
        ++checked;
        Triplet root{PFInstance::of(inst.graph, {}), inst.config, {}};
        SolveResult parent = brute_force_pf(root.instance);
        int chi = root.config.crossings()[0].id;
        auto [tv, tw] = crossing_split(root, chi);
        SolveResult rv = brute_force_pf(tv.instance);
        SolveResult rw = brute_force_pf(tw.instance);
        SolveResult* best = rv.at_least(rw) ? &rv : &rw;
        REQUIRE(parent.feasible() == best->feasible());
        if (parent.feasible()) CHECK(parent.value == best->value);
        // second level, when crossings remain
        for (Triplet* child : {&tv, &tw}) {
            if (child->config.k() == 0) continue;
            SolveResult cp = brute_force_pf(child->instance);
            auto [ta, tb] = crossing_split(*child, child->config.crossings()[0].id);
            SolveResult ra = brute_force_pf(ta.instance);
            SolveResult rb = brute_force_pf(tb.instance);
            SolveResult* cbest = ra.at_least(rb) ? &ra : &rb;
            REQUIRE(cp.feasible() == cbest->feasible());
            if (cp.feasible()) CHECK(cp.value == cbest->value);
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("lift_cut restores parent coordinates, value, and feasibility") {
    Rng rng(91);
    for (int t = 0; t < 40; ++t) {
        CrossingInstance inst = random_crossing_instance(rng, 9, 2, -6, 6);
        if (inst.config.k() == 0) continue;
        Triplet root{PFInstance::of(inst.graph, {}), inst.config, {}};
        auto [tv, tw] = crossing_split(root, root.config.crossings()[0].id);
        for (const Triplet* child : {&tv, &tw}) {
            SolveResult r = brute_force_pf(child->instance);
            if (!r.feasible()) continue;
            Cut lifted = lift_cut(root.instance, child->instance, child->lineage,
                                  *r.witness);
            CHECK(lifted.value == r.value);
            CHECK(is_feasible_cut(root.instance, lifted.side));
            CHECK(static_cast<int>(lifted.side.size()) == inst.graph.node_count());
        }
    }
}

TEST_CASE("lift_cut rejects infeasible child cuts") {
    Triplet t = k5_triplet();
    auto [tv, tw] = crossing_split(t, 0);
    // all-one-side cut violates the zero-weight fixed path
    Cut bad = make_cut(tv.instance.graph,
                       std::vector<char>(tv.instance.graph.node_count(), 0));
    CHECK_THROWS_AS(lift_cut(t.instance, tv.instance, tv.lineage, bad),
                    PreconditionError);
}
