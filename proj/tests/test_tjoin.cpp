#include <doctest.h>

#include <functional>
#include <random>

#include "crosscut/errors.hpp"
#include "crosscut/tjoin.hpp"

using namespace crosscut;

namespace {

MultiGraph path3() {
    MultiGraph g;
    g.node_count = 3;
    g.edges = {{0, 1, BigInt(1)}, {1, 2, BigInt(1)}};
    return g;
}

// subset enumeration oracle
BigInt best_join_weight(const MultiGraph& g, const std::vector<NodeId>& t,
                        bool* exists) {
    std::vector<char> is_t(g.node_count, 0);
    for (NodeId v : t) is_t[v] = 1;
    BigInt best;
    *exists = false;
    const int m = static_cast<int>(g.edges.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> deg(g.node_count, 0);
        BigInt w;
        for (int e = 0; e < m; ++e) {
            if (!(mask & (1 << e))) continue;
            if (g.edges[e].u != g.edges[e].v) {
                ++deg[g.edges[e].u];
                ++deg[g.edges[e].v];
            }
            w += g.edges[e].weight;
        }
        bool match = true;
        for (NodeId v = 0; v < g.node_count; ++v)
            if ((deg[v] % 2 != 0) != (is_t[v] != 0)) match = false;
        if (match && (!*exists || w < best)) {
            best = w;
            *exists = true;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("empty T yields the empty join") {
    auto j = min_weight_t_join(path3(), {});
    CHECK(j.empty());
}

TEST_CASE("path endpoints join through both edges") {
    auto j = min_weight_t_join(path3(), {0, 2});
    CHECK(j.size() == 2);
    CHECK(edge_set_weight(path3(), j).to_int64() == 2);
}

TEST_CASE("4-cycle with all nodes odd costs two") {
    MultiGraph g;
    g.node_count = 4;
    g.edges = {{0, 1, BigInt(1)}, {1, 2, BigInt(1)}, {2, 3, BigInt(1)}, {3, 0, BigInt(1)}};
    auto j = min_weight_t_join(g, {0, 1, 2, 3});
    CHECK(edge_set_weight(g, j).to_int64() == 2);
}

TEST_CASE("t-join error paths") {
    CHECK_THROWS_AS(min_weight_t_join(path3(), {0}), PreconditionError);
    MultiGraph neg = path3();
    neg.edges[0].weight = BigInt(-1);
    CHECK_THROWS_AS(min_weight_t_join(neg, {0, 1}), PreconditionError);
    MultiGraph two;
    two.node_count = 4;
    two.edges = {{0, 1, BigInt(1)}, {2, 3, BigInt(1)}};
    // component {0,1} holds one terminal, {2,3} the other
    CHECK_THROWS_AS(min_weight_t_join(two, {0, 2}), PreconditionError);
    // split evenly per component works
    CHECK(min_weight_t_join(two, {0, 1, 2, 3}).size() == 2);
}

TEST_CASE("self-loops never enter a join") {
    MultiGraph g = path3();
    g.edges.push_back({1, 1, BigInt(0)});
    auto j = min_weight_t_join(g, {0, 2});
    for (EdgeId e : j) CHECK(g.edges[e].u != g.edges[e].v);
    CHECK(edge_set_weight(g, j).to_int64() == 2);
}

TEST_CASE("t-join equals subset enumeration on random multigraphs") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 250; ++t) {
        MultiGraph g;
        g.node_count = 2 + int(rng() % 5);
        int m = 1 + int(rng() % 13);  // <= 14 edges
        for (int e = 0; e < m; ++e) {
            NodeId u = static_cast<NodeId>(rng() % g.node_count);
            NodeId v = static_cast<NodeId>(rng() % g.node_count);
            g.edges.push_back({u, v, BigInt(static_cast<long long>(rng() % 9))});
        }
        // choose an even T subset per component by pairing random nodes of one component
        std::vector<NodeId> terminals;
        for (NodeId v = 0; v < g.node_count; ++v)
            if (rng() % 2) terminals.push_back(v);
        bool exists = false;
        BigInt best = best_join_weight(g, terminals, &exists);
        if (!exists) {
            CHECK_THROWS(min_weight_t_join(g, terminals));
            continue;
        }
        auto j = min_weight_t_join(g, terminals);
        CHECK(edge_set_weight(g, j) == best);
    }
}
