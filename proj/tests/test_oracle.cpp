#include <doctest.h>

#include <algorithm>

#include "crosscut/errors.hpp"
#include "crosscut/generator.hpp"
#include "crosscut/oracle.hpp"

using namespace crosscut;

namespace {
WeightedGraph complete(int n, long long w = 1) {
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) edges.push_back({a, b, BigInt(w)});
    return WeightedGraph::simple(n, edges);
}
}  // namespace

TEST_CASE("oracle basics") {
    WeightedGraph one = WeightedGraph::simple(2, {{0, 1, BigInt(5)}});
    CHECK(brute_force_maxcut(one).value.to_int64() == 5);

    // unit K5: floor(25/4) = 6, re-derivable by hand (3-2 split cuts 3*2)
    CHECK(brute_force_maxcut(complete(5)).value.to_int64() == 6);

    WeightedGraph neg = WeightedGraph::simple(
        3, {{0, 1, BigInt(-2)}, {1, 2, BigInt(-3)}, {0, 2, BigInt(-4)}});
    Cut c = brute_force_maxcut(neg);
    CHECK(c.value.is_zero());
}

TEST_CASE("oracle witness value is consistent") {
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        WeightedGraph g = random_connected_planar(rng, rand_int(rng, 2, 9), 2, -8, 8);
        Cut c = brute_force_maxcut(g);
        CHECK(cut_value(g, c.side) == c.value);
        CHECK(c.side[0] == 1);  // node 0 pinned to S
    }
}

TEST_CASE("oracle pf semantics") {
    WeightedGraph tri = complete(3);
    CHECK(brute_force_pf(PFInstance::of(tri, {})).value ==
          brute_force_maxcut(tri).value);
    CHECK(!brute_force_pf(PFInstance::of(tri, {0, 1, 2})).feasible());
    SolveResult r = brute_force_pf(PFInstance::of(tri, {0}));
    REQUIRE(r.feasible());
    CHECK(r.value.to_int64() == 2);
}

TEST_CASE("oracle size cap") {
    CHECK_THROWS_AS(brute_force_maxcut(complete(25)), TooLargeError);
}

TEST_CASE("oracle value invariant under relabelling") {
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        WeightedGraph g = random_connected_planar(rng, rand_int(rng, 3, 9), 2, -6, 6);
        std::vector<NodeId> perm(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.weight});
        WeightedGraph h = WeightedGraph::simple(g.node_count(), edges);
        CHECK(brute_force_maxcut(g).value == brute_force_maxcut(h).value);
    }
}

TEST_CASE("oracle handles beyond-int64 weights") {
    BigInt huge = BigInt::pow10(25);
    WeightedGraph g = WeightedGraph::simple(
        3, {{0, 1, huge}, {1, 2, huge}, {0, 2, huge}});
    CHECK(brute_force_maxcut(g).value == huge + huge);
}
