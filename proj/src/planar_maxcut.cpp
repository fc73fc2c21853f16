#include "crosscut/planar_maxcut.hpp"

#include <utility>

#include "crosscut/errors.hpp"

namespace crosscut {

DualGraph dual_graph(const WeightedGraph& g, const RotationSystem& rot) {
    RawGraph raw = raw_view(g);
    FaceSet fs = trace_faces(raw, rot);
    if (!euler_ok(raw, fs)) throw Error("internal: dual of a non-planar embedding");
    DualGraph d;
    d.face_count = fs.face_count;
    d.face_of_arc = fs.face_of_arc;
    d.graph.node_count = fs.face_count;
    d.graph.edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int f1 = fs.face_of_arc[2 * e];
        int f2 = fs.face_of_arc[2 * e + 1];
        d.graph.edges.push_back({f1, f2, g.edge(e).weight});
    }
    return d;
}

std::vector<char> recover_partition(const WeightedGraph& g,
                                    const std::vector<char>& in_cut) {
    const int n = g.node_count();
    std::vector<char> side(n, -1);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (const IncidentEdge& inc : g.incident(u)) {
                char want = in_cut[inc.edge] ? (side[u] ? 0 : 1) : side[u];
                if (side[inc.to] == -1) {
                    side[inc.to] = want;
                    stack.push_back(inc.to);
                } else if (side[inc.to] != want) {
                    throw Error("recover_partition: edge set is not a cut");
                }
            }
        }
    }
    return side;
}

Cut max_cut_planar_embedded(const WeightedGraph& g, const RotationSystem& rot) {
    DualGraph dual = dual_graph(g, rot);

    // D0: duals of strictly positive edges; T: odd-degree dual nodes of D0
    std::vector<char> in_d(g.edge_count(), 0);
    BigInt positive_total;
    std::vector<int> deg(dual.face_count, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).weight.sign() > 0) {
            in_d[e] = 1;
            positive_total += g.edge(e).weight;
            const Edge& de = dual.graph.edges[e];
            ++deg[de.u];
            ++deg[de.v];  // self-loop counts twice, keeping parity even
        }
    }
    std::vector<NodeId> odd;
    for (int f = 0; f < dual.face_count; ++f)
        if (deg[f] % 2 != 0) odd.push_back(f);

    MultiGraph abs_dual = dual.graph;
    for (Edge& e : abs_dual.edges) e.weight = e.weight.abs();
    std::vector<EdgeId> join = min_weight_t_join(abs_dual, odd);

    BigInt value = positive_total - edge_set_weight(abs_dual, join);
    for (EdgeId e : join) in_d[e] = in_d[e] ? 0 : 1;

    std::vector<char> side = recover_partition(g, in_d);
    Cut cut = make_cut(g, std::move(side));
    if (cut.value != value)
        throw Error("internal: planar max-cut value mismatch");
    return cut;
}

Cut max_cut_planar(const WeightedGraph& g) {
    auto rot = planar_embedding(g);
    if (!rot) throw NotPlanarError("max_cut_planar: graph is not planar");
    return max_cut_planar_embedded(g, *rot);
}

}  // namespace crosscut
