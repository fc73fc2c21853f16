#include "crosscut/tjoin.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "crosscut/errors.hpp"
#include "crosscut/matching.hpp"

namespace crosscut {

namespace {

struct Dijkstra {
    std::vector<char> reached;
    std::vector<BigInt> dist;
    std::vector<EdgeId> parent_edge;
    std::vector<NodeId> parent_node;
};

Dijkstra shortest_paths(const MultiGraph& g,
                        const std::vector<std::vector<IncidentEdge>>& adj,
                        NodeId source) {
    Dijkstra d;
    d.reached.assign(g.node_count, 0);
    d.dist.assign(g.node_count, BigInt());
    d.parent_edge.assign(g.node_count, kNoEdge);
    d.parent_node.assign(g.node_count, kNoNode);
    using Item = std::pair<BigInt, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    std::vector<char> done(g.node_count, 0);
    d.reached[source] = 1;
    pq.emplace(BigInt(), source);
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (const IncidentEdge& inc : adj[u]) {
            if (inc.to == u) continue;  // self-loops never shorten paths
            BigInt nd = du + g.edges[inc.edge].weight;
            if (!d.reached[inc.to] || nd < d.dist[inc.to]) {
                d.reached[inc.to] = 1;
                d.dist[inc.to] = nd;
                d.parent_edge[inc.to] = inc.edge;
                d.parent_node[inc.to] = u;
                pq.emplace(std::move(nd), inc.to);
            }
        }
    }
    return d;
}

}  // namespace

std::vector<EdgeId> min_weight_t_join(const MultiGraph& g,
                                      const std::vector<NodeId>& terminals) {
    if (terminals.size() % 2 != 0)
        throw PreconditionError("t-join: odd number of terminals");
    {
        std::vector<NodeId> sorted = terminals;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("t-join: duplicate terminal");
    }
    for (const Edge& e : g.edges)
        if (e.weight.sign() < 0)
            throw PreconditionError("t-join: negative weight");

    std::vector<std::vector<IncidentEdge>> adj(g.node_count);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        adj[g.edges[i].u].push_back({static_cast<EdgeId>(i), g.edges[i].v});
        if (g.edges[i].u != g.edges[i].v)
            adj[g.edges[i].v].push_back({static_cast<EdgeId>(i), g.edges[i].u});
    }

    // connected components, and the terminals of each
    std::vector<int> comp(g.node_count, -1);
    int comp_count = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = comp_count++;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (const IncidentEdge& inc : adj[u])
                if (comp[inc.to] == -1) {
                    comp[inc.to] = comp[u];
                    stack.push_back(inc.to);
                }
        }
    }
    std::vector<std::vector<NodeId>> per_comp(comp_count);
    for (NodeId t : terminals) {
        if (t < 0 || t >= g.node_count)
            throw PreconditionError("t-join: terminal out of range");
        per_comp[comp[t]].push_back(t);
    }
    for (const auto& tc : per_comp)
        if (tc.size() % 2 != 0)
            throw PreconditionError("t-join: a component holds an odd number of terminals");

    std::vector<char> in_join(g.edges.size(), 0);
    for (const auto& tc : per_comp) {
        if (tc.empty()) continue;
        const int t = static_cast<int>(tc.size());
        std::vector<Dijkstra> sp;
        sp.reserve(t);
        for (NodeId s : tc) sp.push_back(shortest_paths(g, adj, s));
        std::vector<BigInt> pair_w(static_cast<std::size_t>(t) * (t - 1) / 2);
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                pair_w[pair_index(t, i, j)] = sp[i].dist[tc[j]];
        std::vector<int> mate = min_weight_perfect_matching(t, pair_w);
        for (int i = 0; i < t; ++i) {
            int j = mate[i];
            if (j < i) continue;
            // toggle the shortest path from tc[j] back to tc[i]
            NodeId cur = tc[j];
            while (cur != tc[i]) {
                EdgeId e = sp[i].parent_edge[cur];
                in_join[e] = in_join[e] ? 0 : 1;
                cur = sp[i].parent_node[cur];
            }
        }
    }

    std::vector<EdgeId> join;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (in_join[i]) join.push_back(static_cast<EdgeId>(i));

    // parity sanity: odd degree exactly at the terminals
    std::vector<int> deg(g.node_count, 0);
    for (EdgeId e : join) {
        if (g.edges[e].u == g.edges[e].v) continue;
        ++deg[g.edges[e].u];
        ++deg[g.edges[e].v];
    }
    std::vector<char> is_t(g.node_count, 0);
    for (NodeId v : terminals) is_t[v] = 1;
    for (NodeId v = 0; v < g.node_count; ++v)
        if ((deg[v] % 2 != 0) != (is_t[v] != 0))
            throw Error("internal: t-join parity check failed");
    return join;
}

BigInt edge_set_weight(const MultiGraph& g, const std::vector<EdgeId>& edges) {
    BigInt w;
    for (EdgeId e : edges) w += g.edges[e].weight;
    return w;
}

}  // namespace crosscut
