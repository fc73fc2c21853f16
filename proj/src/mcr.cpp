#include "crosscut/mcr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "crosscut/errors.hpp"

namespace crosscut {

bool Realization::is_split(EdgeId e) const {
    return std::binary_search(split_edges.begin(), split_edges.end(), e);
}

namespace {

RealizationCheck fail(std::string why) { return {false, std::move(why)}; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

RealizationCheck validate_realization(const WeightedGraph& g, const Realization& r) {
    const WeightedGraph& h = r.h;
    if (static_cast<int>(r.contraction.size()) != h.node_count())
        return fail("contraction map does not cover every H node");
    for (NodeId gn : r.contraction)
        if (gn < 0 || gn >= g.node_count())
            return fail("contraction map targets a nonexistent G node");
    if (h.scale_pow10() != g.scale_pow10())
        return fail("H and G weights use different scaling");
    if (h.max_degree() > 3) return fail("H has a node of degree > 3");
    for (EdgeId e : r.split_edges)
        if (e < 0 || e >= h.edge_count()) return fail("split edge id out of range");

    // split edges must form one tree per G node
    UnionFind uf(h.node_count());
    for (EdgeId e : r.split_edges) {
        const Edge& se = h.edge(e);
        if (r.contraction[se.u] != r.contraction[se.v])
            return fail("a split edge joins two different G nodes");
        if (!uf.unite(se.u, se.v)) return fail("split edges contain a cycle");
    }
    std::map<int, NodeId> class_target;  // uf class -> G node
    std::vector<char> covered(g.node_count(), 0);
    for (NodeId hv = 0; hv < h.node_count(); ++hv) {
        int c = uf.find(hv);
        auto [it, inserted] = class_target.emplace(c, r.contraction[hv]);
        if (!inserted && it->second != r.contraction[hv])
            return fail("contraction class maps to two G nodes");
    }
    std::map<NodeId, int> classes_of_target;
    for (const auto& [c, gn] : class_target) ++classes_of_target[gn];
    for (const auto& [gn, cnt] : classes_of_target) {
        if (cnt > 1) return fail("split edges of a G node do not form one connected tree");
        covered[gn] = 1;
    }
    for (NodeId gn = 0; gn < g.node_count(); ++gn)
        if (!covered[gn]) return fail("a G node has no preimage in H");

    // contracting must reproduce G's edges, weights included
    std::map<std::pair<NodeId, NodeId>, EdgeId> seen;
    int mapped = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (r.is_split(e)) continue;
        const Edge& he = h.edge(e);
        NodeId gu = r.contraction[he.u];
        NodeId gv = r.contraction[he.v];
        if (gu == gv) return fail("a non-split edge contracts to a self-loop");
        auto key = std::minmax(gu, gv);
        if (!seen.emplace(key, e).second)
            return fail("two non-split edges contract to the same G edge");
        EdgeId ge = g.find_edge(gu, gv);
        if (ge == kNoEdge) return fail("contracted edge is missing from G");
        if (!(g.edge(ge).weight == he.weight))
            return fail("contracted edge weight differs from G");
        ++mapped;
    }
    if (mapped != g.edge_count()) return fail("G has edges with no preimage in H");
    return {true, ""};
}

Realization trivial_realization(const WeightedGraph& g) {
    Realization r;
    r.h = g;
    r.contraction.resize(g.node_count());
    std::iota(r.contraction.begin(), r.contraction.end(), 0);
    return r;
}

Realization split_node(const Realization& r, NodeId v, NodeId nb1, NodeId nb2) {
    const WeightedGraph& h = r.h;
    if (v < 0 || v >= h.node_count())
        throw PreconditionError("split_node: no such node");
    if (nb1 == nb2) throw PreconditionError("split_node: neighbors must differ");
    EdgeId e1 = h.find_edge(v, nb1);
    EdgeId e2 = h.find_edge(v, nb2);
    if (e1 == kNoEdge || e2 == kNoEdge)
        throw PreconditionError("split_node: chosen nodes are not neighbors of v");

    const NodeId v1 = h.node_count();
    std::vector<Edge> edges = h.edges();
    for (EdgeId e : {e1, e2}) {
        if (edges[e].u == v)
            edges[e].u = v1;
        else
            edges[e].v = v1;
    }
    EdgeId split_id = static_cast<EdgeId>(edges.size());
    edges.push_back({v, v1, BigInt(0)});

    Realization out;
    out.h = WeightedGraph::simple(h.node_count() + 1, std::move(edges), h.scale_pow10());
    out.split_edges = r.split_edges;
    out.split_edges.push_back(split_id);
    std::sort(out.split_edges.begin(), out.split_edges.end());
    out.contraction = r.contraction;
    out.contraction.push_back(r.contraction[v]);
    return out;
}

SplitPenalty SplitPenalty::of(const WeightedGraph& g) {
    return {BigInt(-3) * g.total_abs_weight()};
}

SolveResult solve_via_realization(const WeightedGraph& g, const Realization& r,
                                  const CrossingConfiguration& x_h,
                                  const SolveOptions& options) {
    RealizationCheck check = validate_realization(g, r);
    if (!check.ok)
        throw PreconditionError("invalid realization: " + check.reason);

    if (g.total_abs_weight().is_zero()) {
        // every cut has value 0; the empty side assignment is optimal
        return SolveResult::of(make_cut(g, std::vector<char>(g.node_count(), 0)));
    }

    SplitPenalty penalty = SplitPenalty::of(g);
    std::vector<Edge> edges = r.h.edges();
    for (EdgeId e : r.split_edges) edges[e].weight = penalty.n;
    WeightedGraph penalized =
        WeightedGraph::simple(r.h.node_count(), std::move(edges), r.h.scale_pow10());

    SolveResult hr = solve(penalized, x_h, options);
    if (!hr.feasible()) throw Error("internal: penalized solve reported infeasible");

    for (EdgeId e : r.split_edges) {
        const Edge& se = r.h.edge(e);
        if (hr.witness->side[se.u] != hr.witness->side[se.v])
            throw Error("a split edge ended up in the optimal cut");
    }
    std::vector<char> side(g.node_count(), -1);
    for (NodeId hv = 0; hv < r.h.node_count(); ++hv) {
        NodeId gv = r.contraction[hv];
        char s = hr.witness->side[hv];
        if (side[gv] == -1)
            side[gv] = s;
        else if (side[gv] != s)
            throw Error("internal: contraction tree is not monochromatic");
    }
    Cut cut = make_cut(g, std::move(side));
    if (cut.value != hr.value) throw Error("internal: realization cut value mismatch");
    if (!cut.side.empty() && !cut.in_s(0)) cut = cut.complemented();
    SolveResult out = SolveResult::of(std::move(cut));
    out.stats = std::move(hr.stats);
    return out;
}

}  // namespace crosscut
