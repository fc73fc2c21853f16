#include <doctest.h>

#include <random>

#include "crosscut/errors.hpp"
#include "crosscut/generator.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/oracle.hpp"

using namespace crosscut;

namespace {
WeightedGraph triangle() {
    return WeightedGraph::simple(
        3, {{0, 1, BigInt(1)}, {0, 2, BigInt(1)}, {1, 2, BigInt(1)}});
}
}  // namespace

TEST_CASE("normalize drops self-loops without changing cut values") {
    std::vector<RawEdge> raw = {{0, 0, "7"}, {0, 1, "2"}, {1, 2, "3"}};
    std::vector<EdgeId> map;
    WeightedGraph g = normalize_graph(3, raw, &map);
    CHECK(g.edge_count() == 2);
    CHECK(map[0] == kNoEdge);
    CHECK(cut_value(g, {1, 0, 0}).to_int64() == 2);
}

TEST_CASE("normalize merges parallel edges by weight sum") {
    std::vector<RawEdge> raw = {{0, 1, "2"}, {1, 0, "3"}};
    std::vector<EdgeId> map;
    WeightedGraph g = normalize_graph(2, raw, &map);
    CHECK(g.edge_count() == 1);
    CHECK(map[0] == map[1]);
    CHECK(g.edge(0).weight.to_int64() == 5);
}

TEST_CASE("normalize keeps simple integer graphs unchanged") {
    std::vector<RawEdge> raw = {{0, 1, "4"}, {1, 2, "-2"}};
    WeightedGraph g = normalize_graph(3, raw);
    CHECK(g.edge_count() == 2);
    CHECK(g.scale_pow10() == 0);
    CHECK(g.edge(0).weight.to_int64() == 4);
    CHECK(g.edge(1).weight.to_int64() == -2);
}

TEST_CASE("normalize scales decimals by one common power of ten") {
    std::vector<RawEdge> raw = {{0, 1, "0.5"}, {1, 2, "2"}, {2, 3, "-1.25"}};
    WeightedGraph g = normalize_graph(4, raw);
    CHECK(g.scale_pow10() == 2);
    CHECK(g.edge(0).weight.to_int64() == 50);
    CHECK(g.edge(1).weight.to_int64() == 200);
    CHECK(g.edge(2).weight.to_int64() == -125);
}

TEST_CASE("normalize rejects bad input") {
    CHECK_THROWS_AS(normalize_graph(2, std::vector<RawEdge>{{0, 1, "1.2.3"}}),
                    PreconditionError);
    CHECK_THROWS_AS(normalize_graph(2, std::vector<RawEdge>{{0, 5, "1"}}),
                    PreconditionError);
    CHECK_THROWS_AS(normalize_graph(2, std::vector<RawEdge>{{0, 1, "abc"}}),
                    PreconditionError);
}

TEST_CASE("cut_value examples") {
    WeightedGraph tri = triangle();
    CHECK(cut_value(tri, {1, 0, 0}).to_int64() == 2);
    CHECK(cut_value(tri, {0, 0, 0}).is_zero());
    WeightedGraph path =
        WeightedGraph::simple(3, {{0, 1, BigInt(3)}, {1, 2, BigInt(-2)}});
    CHECK(cut_value(path, {0, 1, 0}).to_int64() == 1);
}

TEST_CASE("cut complement symmetry on random graphs") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        WeightedGraph g = random_connected_planar(rng, rand_int(rng, 2, 10), 2, -9, 9);
        std::vector<char> side(g.node_count());
        for (auto& b : side) b = static_cast<char>(rng() % 2);
        std::vector<char> comp = side;
        for (auto& b : comp) b = b ? 0 : 1;
        CHECK(cut_value(g, side) == cut_value(g, comp));
    }
}

TEST_CASE("bipartite positive graphs cut everything") {
    // K2,3 with positive weights: the bipartition cuts the full total
    std::vector<Edge> edges;
    BigInt total;
    for (NodeId a = 0; a < 2; ++a)
        for (NodeId b = 2; b < 5; ++b) {
            edges.push_back({a, b, BigInt(1 + a + b)});
            total += BigInt(1 + a + b);
        }
    WeightedGraph g = WeightedGraph::simple(5, edges);
    CHECK(brute_force_maxcut(g).value == total);
}

TEST_CASE("is_feasible_cut") {
    WeightedGraph tri = triangle();
    PFInstance empty = PFInstance::of(tri, {});
    CHECK(is_feasible_cut(empty, {1, 1, 0}));
    PFInstance one = PFInstance::of(tri, {0});  // edge 0 = (0,1)
    CHECK(is_feasible_cut(one, {1, 0, 0}));
    CHECK(!is_feasible_cut(one, {1, 1, 0}));
}

TEST_CASE("pf_infeasible is exactly odd-cycle detection") {
    WeightedGraph tri = triangle();
    CHECK(pf_infeasible(PFInstance::of(tri, {0, 1, 2})));
    std::vector<Edge> sq = {{0, 1, BigInt(1)},
                            {1, 2, BigInt(1)},
                            {2, 3, BigInt(1)},
                            {3, 0, BigInt(1)}};
    WeightedGraph square = WeightedGraph::simple(4, sq);
    CHECK(!pf_infeasible(PFInstance::of(square, {0, 1, 2, 3})));
    CHECK(!pf_infeasible(PFInstance::of(square, {})));
}

TEST_CASE("pf_infeasible iff no feasible cut exists (exhaustive)") {
    Rng rng(17);
    for (int t = 0; t < 120; ++t) {
        WeightedGraph g = random_connected_planar(rng, rand_int(rng, 2, 12), 2, -5, 5);
        std::vector<EdgeId> fixed;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (rng() % 3 == 0) fixed.push_back(e);
        PFInstance inst = PFInstance::of(g, fixed);
        bool any = brute_force_pf(inst).feasible();
        CHECK(pf_infeasible(inst) == !any);
    }
}
