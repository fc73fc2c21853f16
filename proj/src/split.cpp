#include "crosscut/split.hpp"

#include <algorithm>
#include <map>

#include "crosscut/errors.hpp"

namespace crosscut {

BisubdivideResult bisubdivide(const PFInstance& inst, EdgeId e, NodeId anchor) {
    const WeightedGraph& g = inst.graph;
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("bisubdivide: no such edge");
    const Edge& edge = g.edge(e);
    if (edge.u != anchor && edge.v != anchor)
        throw PreconditionError("bisubdivide: anchor is not an endpoint");
    const NodeId far = edge.other(anchor);
    const int n = g.node_count();
    const int m = g.edge_count();

    BisubdivideResult r;
    r.vbar = n;
    r.wbar = n + 1;
    r.edge_wbar_w = e;
    r.edge_v_vbar = m;
    r.edge_vbar_wbar = m + 1;

    std::vector<Edge> edges = g.edges();
    edges[e] = {r.wbar, far, edge.weight};
    edges.push_back({anchor, r.vbar, BigInt(0)});
    edges.push_back({r.vbar, r.wbar, BigInt(0)});

    std::vector<EdgeId> fixed = inst.fixed;  // a fixed e keeps its id on wbar-w
    fixed.push_back(r.edge_v_vbar);
    fixed.push_back(r.edge_vbar_wbar);
    r.instance = PFInstance::of(
        WeightedGraph::simple(n + 2, std::move(edges), g.scale_pow10()),
        std::move(fixed));

    r.map.parent_to_child.resize(n);
    r.map.child_to_parent.assign(n + 2, kNoNode);
    for (NodeId i = 0; i < n; ++i) {
        r.map.parent_to_child[i] = i;
        r.map.child_to_parent[i] = i;
    }
    r.map.fresh = {r.vbar, r.wbar};
    return r;
}

IdentifyResult identify(const PFInstance& inst, NodeId a, NodeId b) {
    const WeightedGraph& g = inst.graph;
    const int n = g.node_count();
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw PreconditionError("identify: invalid node pair");
    if (g.find_edge(a, b) != kNoEdge)
        throw PreconditionError("identify: nodes are adjacent");
    for (const IncidentEdge& ia : g.incident(a))
        for (const IncidentEdge& ib : g.incident(b))
            if (ia.to == ib.to)
                throw PreconditionError("identify: nodes share a neighbor");

    auto map_node = [&](NodeId x) -> NodeId {
        if (x == b) x = a;
        return x < b ? x : x - 1;
    };
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        e.u = map_node(e.u);
        e.v = map_node(e.v);
    }
    IdentifyResult r;
    r.instance = PFInstance::of(
        WeightedGraph::simple(n - 1, std::move(edges), g.scale_pow10()), inst.fixed);
    r.merged_node = map_node(a);
    r.map.parent_to_child.resize(n);
    r.map.child_to_parent.assign(n - 1, kNoNode);
    for (NodeId x = 0; x < n; ++x) r.map.parent_to_child[x] = map_node(x);
    for (NodeId x = 0; x < n; ++x)
        if (x != b) r.map.child_to_parent[map_node(x)] = x;
    r.map.child_to_parent[r.merged_node] = a;
    r.map.merged = {{a, b}};
    return r;
}

namespace {

// Splits an order list at `id`: entries before it (oriented away from the
// crossing toward the list start) and after it.
void split_order(const std::vector<int>& list, int id,
                 std::vector<int>& before, std::vector<int>& after) {
    std::size_t pos = list.size();
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == id) pos = i;
    if (pos == list.size()) throw ConfigError("crossing missing from its edge order");
    before.assign(list.begin(), list.begin() + pos);
    after.assign(list.begin() + pos + 1, list.end());
}

}  // namespace

std::pair<Triplet, Triplet> crossing_split(const Triplet& t, int crossing_id) {
    const CrossingConfiguration& x = t.config;
    if (!x.has_id(crossing_id)) throw PreconditionError("crossing_split: no such crossing");
    const Crossing& chi = x.by_id(crossing_id);
    const WeightedGraph& g = t.instance.graph;
    const Edge& a = g.edge(chi.e1);
    const Edge& b = g.edge(chi.e2);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        throw NonGoodError("crossing_split: crossing edges share an endpoint");

    // deterministic roles: lexicographically smaller edge is vw, anchors are
    // the lower-id endpoints
    auto key = [&](EdgeId e) {
        return std::make_pair(g.edge(e).low(), g.edge(e).high());
    };
    EdgeId evw = key(chi.e1) < key(chi.e2) ? chi.e1 : chi.e2;
    EdgeId exy = chi.other(evw);
    const NodeId v = g.edge(evw).low();
    const NodeId xnode = g.edge(exy).low();

    BisubdivideResult r1 = bisubdivide(t.instance, evw, v);
    BisubdivideResult r2 = bisubdivide(r1.instance, exy, xnode);

    // transfer the crossing orders: Y_j lands on edge j-jbar, oriented from j
    std::vector<int> yv, yw, yx, yy;
    split_order(x.order_of(evw), crossing_id, yv, yw);
    split_order(x.order_of(exy), crossing_id, yx, yy);
    std::reverse(yw.begin(), yw.end());  // canonical direction is from w
    std::reverse(yy.begin(), yy.end());

    std::map<EdgeId, std::vector<int>> orders;
    for (const Crossing& c : x.crossings()) {
        if (c.id == crossing_id) continue;
        for (EdgeId e : {c.e1, c.e2})
            if (e != evw && e != exy && !orders.count(e)) {
                std::vector<int> kept;
                for (int id : x.order_of(e))
                    if (id != crossing_id) kept.push_back(id);
                orders[e] = std::move(kept);
            }
    }
    if (!yv.empty()) orders[r1.edge_v_vbar] = yv;
    if (!yw.empty()) orders[r1.edge_wbar_w] = yw;
    if (!yx.empty()) orders[r2.edge_v_vbar] = yx;
    if (!yy.empty()) orders[r2.edge_wbar_w] = yy;

    auto in_list = [](const std::vector<int>& l, int id) {
        return std::find(l.begin(), l.end(), id) != l.end();
    };
    std::vector<Crossing> crossings;
    for (const Crossing& c : x.crossings()) {
        if (c.id == crossing_id) continue;
        Crossing nc = c;
        for (EdgeId* e : {&nc.e1, &nc.e2}) {
            if (*e == evw) *e = in_list(yv, c.id) ? r1.edge_v_vbar : r1.edge_wbar_w;
            else if (*e == exy) *e = in_list(yx, c.id) ? r2.edge_v_vbar : r2.edge_wbar_w;
        }
        crossings.push_back(nc);
    }
    CrossingConfiguration child_config =
        CrossingConfiguration::of(std::move(crossings), std::move(orders));

    IdentifyResult same = identify(r2.instance, r1.vbar, r2.vbar);
    IdentifyResult diff = identify(r2.instance, r1.wbar, r2.vbar);

    Triplet tv{std::move(same.instance), child_config, {r1.map, r2.map, same.map}};
    Triplet tw{std::move(diff.instance), std::move(child_config),
               {r1.map, r2.map, diff.map}};
    return {std::move(tv), std::move(tw)};
}

std::vector<char> lift_sides(const Lineage& lineage, const std::vector<char>& child_sides) {
    std::vector<char> cur = child_sides;
    for (auto it = lineage.rbegin(); it != lineage.rend(); ++it) {
        std::vector<char> up(it->parent_to_child.size());
        for (std::size_t p = 0; p < up.size(); ++p)
            up[p] = cur[it->parent_to_child[p]];
        cur = std::move(up);
    }
    return cur;
}

Cut lift_cut(const PFInstance& parent, const PFInstance& child,
             const Lineage& lineage, const Cut& child_cut) {
    if (!is_feasible_cut(child, child_cut.side))
        throw PreconditionError("lift_cut: child cut violates a fixed edge");
    std::vector<char> side = lift_sides(lineage, child_cut.side);
    if (static_cast<int>(side.size()) != parent.graph.node_count())
        throw PreconditionError("lift_cut: lineage does not reach the parent");
    Cut cut = make_cut(parent.graph, std::move(side));
    if (cut.value != child_cut.value)
        throw Error("internal: lifted cut changed value");
    if (!is_feasible_cut(parent, cut.side))
        throw Error("internal: lifted cut violates a parent fixed edge");
    return cut;
}

}  // namespace crosscut
