#include "crosscut/embedding.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include <algorithm>

#include "crosscut/errors.hpp"

namespace crosscut {

RawGraph raw_view(const WeightedGraph& g) {
    RawGraph r;
    r.node_count = g.node_count();
    r.edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) r.edges.emplace_back(e.u, e.v);
    return r;
}

FaceSet trace_faces(const RawGraph& g, const RotationSystem& rot) {
    const int arcs = g.arc_count();
    // next arc in face after a: rotation successor of reverse(a) at target(a)
    std::vector<ArcId> next(arcs, -1);
    std::vector<int> pos(arcs, -1);
    for (NodeId v = 0; v < rot.node_count(); ++v) {
        const auto& r = rot.rotation(v);
        for (std::size_t i = 0; i < r.size(); ++i) pos[r[i]] = static_cast<int>(i);
    }
    for (ArcId a = 0; a < arcs; ++a) {
        NodeId t = g.arc_target(a);
        const auto& r = rot.rotation(t);
        ArcId rev = reverse_arc(a);
        next[a] = r[(pos[rev] + 1) % r.size()];
    }
    FaceSet fs;
    fs.face_of_arc.assign(arcs, -1);
    for (ArcId a0 = 0; a0 < arcs; ++a0) {
        if (fs.face_of_arc[a0] != -1) continue;
        int f = fs.face_count++;
        fs.faces.emplace_back();
        ArcId a = a0;
        do {
            fs.face_of_arc[a] = f;
            fs.faces[f].push_back(a);
            a = next[a];
        } while (a != a0);
    }
    return fs;
}

namespace {

struct ComponentInfo {
    std::vector<int> comp_of_node;
    int count = 0;
};

ComponentInfo components(const RawGraph& g) {
    ComponentInfo ci;
    ci.comp_of_node.assign(g.node_count, -1);
    std::vector<std::vector<NodeId>> adj(g.node_count);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count; ++s) {
        if (ci.comp_of_node[s] != -1) continue;
        int c = ci.count++;
        ci.comp_of_node[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : adj[u])
                if (ci.comp_of_node[w] == -1) {
                    ci.comp_of_node[w] = c;
                    stack.push_back(w);
                }
        }
    }
    return ci;
}

}  // namespace

bool euler_ok(const RawGraph& g, const FaceSet& faces) {
    ComponentInfo ci = components(g);
    std::vector<int> n(ci.count, 0), m(ci.count, 0), f(ci.count, 0);
    for (NodeId v = 0; v < g.node_count; ++v) ++n[ci.comp_of_node[v]];
    for (const auto& [u, v] : g.edges) ++m[ci.comp_of_node[u]];
    std::vector<char> seen(faces.face_count, 0);
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        int fc = faces.face_of_arc[a];
        if (!seen[fc]) {
            seen[fc] = 1;
            ++f[ci.comp_of_node[g.arc_source(a)]];
        }
    }
    for (int c = 0; c < ci.count; ++c) {
        if (m[c] == 0) continue;
        if (n[c] - m[c] + f[c] != 2) return false;
    }
    return true;
}

namespace {

using BoostGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
    boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Subdivided view: parallel duplicates and self-loops get helper nodes so the
// planarity test always sees a simple graph. aux edge -> (original edge,
// role: 2 = whole edge, 0 = piece at u, 1 = piece at v, -1 = interior piece).
struct AuxGraph {
    int node_count = 0;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::pair<EdgeId, int>> origin;
};

AuxGraph subdivide_for_planarity(const RawGraph& g) {
    AuxGraph aux;
    aux.node_count = g.node_count;
    std::vector<std::vector<NodeId>> adj(g.node_count);
    auto adjacent = [&](NodeId a, NodeId b) {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        EdgeId e = static_cast<EdgeId>(i);
        if (u != v && !adjacent(u, v)) {
            adj[u].push_back(v);
            adj[v].push_back(u);
            aux.edges.emplace_back(u, v);
            aux.origin.emplace_back(e, 2);
        } else {
            // subdivide twice so even self-loops become simple paths
            NodeId a = aux.node_count++;
            NodeId b = aux.node_count++;
            aux.edges.emplace_back(u, a);
            aux.origin.emplace_back(e, 0);
            aux.edges.emplace_back(a, b);
            aux.origin.emplace_back(e, -1);
            aux.edges.emplace_back(b, v);
            aux.origin.emplace_back(e, 1);
        }
    }
    return aux;
}

}  // namespace

std::optional<RotationSystem> planar_rotation(const RawGraph& g) {
    AuxGraph aux = subdivide_for_planarity(g);
    BoostGraph bg(aux.node_count);
    for (std::size_t i = 0; i < aux.edges.size(); ++i)
        boost::add_edge(aux.edges[i].first, aux.edges[i].second,
                        static_cast<int>(i), bg);
    std::vector<std::vector<BoostEdge>> emb(aux.node_count);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = emb.data());
    if (!planar) return std::nullopt;

    auto edge_index = boost::get(boost::edge_index, bg);
    std::vector<std::vector<ArcId>> rot(g.node_count);
    for (NodeId v = 0; v < g.node_count; ++v) {
        for (const BoostEdge& ed : emb[v]) {
            int aux_id = edge_index[ed];
            auto [orig, role] = aux.origin[aux_id];
            if (role == -1) continue;  // interior piece, both endpoints helpers
            ArcId arc;
            if (role == 2)
                arc = (g.edges[orig].first == v) ? 2 * orig : 2 * orig + 1;
            else
                arc = 2 * orig + role;
            rot[v].push_back(arc);
        }
    }
    return RotationSystem(std::move(rot));
}

bool is_planar(const RawGraph& g) {
    AuxGraph aux = subdivide_for_planarity(g);
    BoostGraph bg(aux.node_count);
    for (std::size_t i = 0; i < aux.edges.size(); ++i)
        boost::add_edge(aux.edges[i].first, aux.edges[i].second,
                        static_cast<int>(i), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationSystem> planar_embedding(const WeightedGraph& g) {
    RawGraph raw = raw_view(g);
    auto rot = planar_rotation(raw);
    if (!rot) return std::nullopt;
    FaceSet fs = trace_faces(raw, *rot);
    if (!euler_ok(raw, fs))
        throw Error("internal: embedding failed the Euler check");
    return rot;
}

}  // namespace crosscut
