#include "crosscut/generator.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "crosscut/errors.hpp"

namespace crosscut {

int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

namespace {

// Planar graph grown by face subdivision. Faces stay simple vertex cycles,
// so every intermediate state is a plane graph with a known embedding.
// Planted degree-4 hubs (future crossings) are frozen: no later op may touch
// them, which keeps their recorded rotation valid.
struct FaceGrower {
    Rng& rng;
    int degree_cap;
    int node_count = 3;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::set<std::pair<NodeId, NodeId>> edge_set;
    std::vector<int> degree;
    std::vector<char> frozen;
    std::vector<std::vector<NodeId>> faces;
    // planted hub -> its 4 neighbors in rotation order
    std::vector<std::pair<NodeId, std::array<NodeId, 4>>> planted;

    FaceGrower(Rng& r, int cap) : rng(r), degree_cap(cap), degree(3, 2), frozen(3, 0) {
        add_edge(0, 1);
        add_edge(1, 2);
        add_edge(2, 0);
        faces = {{0, 1, 2}, {0, 2, 1}};
    }

    void add_edge(NodeId u, NodeId v) {
        edges.emplace_back(u, v);
        edge_set.insert(std::minmax(u, v));
    }
    bool has_edge(NodeId u, NodeId v) const {
        return edge_set.count(std::minmax(u, v)) != 0;
    }
    NodeId fresh_node(int deg, bool freeze) {
        NodeId z = node_count++;
        degree.push_back(deg);
        frozen.push_back(freeze ? 1 : 0);
        return z;
    }
    bool usable(NodeId v, int extra) const {
        return !frozen[v] && degree[v] + extra <= degree_cap;
    }

    bool try_chord() {
        int f = rand_int(rng, 0, static_cast<int>(faces.size()) - 1);
        const auto& cyc = faces[f];
        int len = static_cast<int>(cyc.size());
        if (len < 4) return false;
        int i = rand_int(rng, 0, len - 1);
        int off = rand_int(rng, 2, len - 2);
        int j = (i + off) % len;
        NodeId u = cyc[i], v = cyc[j];
        if (has_edge(u, v) || !usable(u, 1) || !usable(v, 1)) return false;
        std::vector<NodeId> f1, f2;
        for (int p = i;; p = (p + 1) % len) {
            f1.push_back(cyc[p]);
            if (p == j) break;
        }
        for (int p = j;; p = (p + 1) % len) {
            f2.push_back(cyc[p]);
            if (p == i) break;
        }
        ++degree[u];
        ++degree[v];
        add_edge(u, v);
        faces[f] = std::move(f1);
        faces.push_back(std::move(f2));
        return true;
    }

    // New node joined to `span` consecutive boundary nodes; span 4 plants a
    // frozen crossing hub.
    bool try_vertex(int span) {
        int f = rand_int(rng, 0, static_cast<int>(faces.size()) - 1);
        const auto cyc = faces[f];
        int len = static_cast<int>(cyc.size());
        if (len < span) return false;
        int i = rand_int(rng, 0, len - 1);
        std::vector<NodeId> window(span);
        for (int s = 0; s < span; ++s) window[s] = cyc[(i + s) % len];
        for (NodeId w : window)
            if (!usable(w, 1)) return false;
        NodeId z = fresh_node(span, span == 4);
        for (NodeId w : window) {
            ++degree[w];
            add_edge(z, w);
        }
        std::vector<std::vector<NodeId>> created;
        for (int s = 0; s + 1 < span; ++s)
            created.push_back({window[s], window[s + 1], z});
        std::vector<NodeId> big = {window[0], z};
        for (int p = (i + span - 1) % len; p != i; p = (p + 1) % len)
            big.push_back(cyc[p]);
        faces[f] = std::move(big);
        for (auto& fc : created) faces.push_back(std::move(fc));
        if (span == 4)
            planted.push_back({z, {window[0], window[1], window[2], window[3]}});
        return true;
    }

    // Two adjacent hubs inside one face; an edge threaded through both picks
    // up two crossings, exercising multi-crossing order lists.
    bool try_chain() {
        int f = rand_int(rng, 0, static_cast<int>(faces.size()) - 1);
        const auto cyc = faces[f];
        int len = static_cast<int>(cyc.size());
        if (len < 5) return false;
        int i = rand_int(rng, 0, len - 1);
        std::array<NodeId, 5> w;
        for (int s = 0; s < 5; ++s) w[s] = cyc[(i + s) % len];
        for (int s = 0; s < 4; ++s)
            if (!usable(w[s], 1)) return false;
        if (!usable(w[4], 2)) return false;
        NodeId z1 = fresh_node(4, true);
        NodeId z2 = fresh_node(4, true);
        add_edge(z1, w[0]);
        add_edge(z1, w[1]);
        add_edge(z1, z2);
        add_edge(z1, w[4]);
        add_edge(z2, w[2]);
        add_edge(z2, w[3]);
        add_edge(z2, w[4]);
        for (int s = 0; s < 4; ++s) ++degree[w[s]];
        degree[w[4]] += 2;
        faces[f] = {w[0], z1, w[4]};
        for (int p = (i + 4) % len; p != i; p = (p + 1) % len)
            if (cyc[p] != w[4]) faces[f].push_back(cyc[p]);
        faces.push_back({w[0], w[1], z1});
        faces.push_back({w[1], w[2], z2, z1});
        faces.push_back({w[2], w[3], z2});
        faces.push_back({w[3], w[4], z2});
        faces.push_back({z1, z2, w[4]});
        planted.push_back({z1, {w[0], w[1], z2, w[4]}});
        planted.push_back({z2, {z1, w[2], w[3], w[4]}});
        return true;
    }

    // Replaces an edge by a two-edge path; thins out triangles so that
    // contractions stay simple.
    bool try_subdivide() {
        if (edges.empty()) return false;
        int e = rand_int(rng, 0, static_cast<int>(edges.size()) - 1);
        auto [u, v] = edges[e];
        if (frozen[u] || frozen[v]) return false;
        NodeId z = fresh_node(2, false);
        edge_set.erase(std::minmax(u, v));
        edges[e] = {u, z};
        edge_set.insert(std::minmax(u, z));
        add_edge(z, v);
        // splice z into the two faces walking through u,v consecutively
        for (auto& cyc : faces) {
            int len = static_cast<int>(cyc.size());
            for (int p = 0; p < len; ++p) {
                NodeId a = cyc[p], b = cyc[(p + 1) % len];
                if ((a == u && b == v) || (a == v && b == u)) {
                    cyc.insert(cyc.begin() + p + 1, z);
                    break;
                }
            }
        }
        return true;
    }

    void grow(int target_nodes, int plant_percent, int chain_percent,
              int subdiv_percent) {
        int guard = 0;
        while (node_count < target_nodes && guard++ < 6000) {
            int roll = rand_int(rng, 0, 99);
            if (roll < chain_percent)
                try_chain();
            else if (roll < chain_percent + plant_percent)
                try_vertex(4);
            else if (roll < chain_percent + plant_percent + subdiv_percent)
                try_subdivide();
            else if (roll % 5 == 0)
                try_chord();
            else
                try_vertex(rand_int(rng, 2, 3));
        }
    }
};

std::vector<Edge> weighted_edges(Rng& rng,
                                 const std::vector<std::pair<NodeId, NodeId>>& edges,
                                 int lo, int hi) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& [u, v] : edges)
        out.push_back({u, v, BigInt(rand_int(rng, lo, hi))});
    return out;
}

struct Thread {
    std::vector<NodeId> dummies;
    NodeId a = kNoNode;
    NodeId b = kNoNode;
};

// Threads the opposite edge pairs of each chosen dummy; nullopt when the
// choice is invalid (dummy cycle or self-crossing edge).
std::optional<std::vector<Thread>> build_threads(
    const std::vector<NodeId>& dummies,
    const std::map<NodeId, std::array<NodeId, 4>>& rot,
    std::map<std::pair<NodeId, int>, int>* thread_of_pair) {
    std::set<NodeId> is_dummy(dummies.begin(), dummies.end());
    std::vector<Thread> threads;
    std::map<std::pair<NodeId, int>, char> used;

    auto extend = [&](NodeId from, NodeId towards,
                      std::vector<NodeId>& passed) -> std::optional<NodeId> {
        NodeId prev = from, cur = towards;
        while (is_dummy.count(cur)) {
            if (cur == from ||
                std::find(passed.begin(), passed.end(), cur) != passed.end())
                return std::nullopt;
            const auto& r = rot.at(cur);
            int idx = -1;
            for (int s = 0; s < 4; ++s)
                if (r[s] == prev) idx = s;
            if (idx < 0) return std::nullopt;
            used[{cur, idx % 2}] = 1;
            passed.push_back(cur);
            prev = cur;
            cur = r[(idx + 2) % 4];
        }
        return cur;
    };

    for (NodeId d : dummies) {
        for (int pair = 0; pair < 2; ++pair) {
            if (used.count({d, pair})) continue;
            used[{d, pair}] = 1;
            const auto& r = rot.at(d);
            std::vector<NodeId> left_pass, right_pass;
            auto a = extend(d, r[pair], left_pass);
            auto b = extend(d, r[pair + 2], right_pass);
            if (!a || !b) return std::nullopt;
            Thread t;
            t.a = *a;
            t.b = *b;
            t.dummies.assign(left_pass.rbegin(), left_pass.rend());
            t.dummies.push_back(d);
            t.dummies.insert(t.dummies.end(), right_pass.begin(), right_pass.end());
            std::set<NodeId> uniq(t.dummies.begin(), t.dummies.end());
            if (uniq.size() != t.dummies.size()) return std::nullopt;
            if (t.a == t.b) return std::nullopt;
            threads.push_back(std::move(t));
        }
    }
    for (std::size_t ti = 0; ti < threads.size(); ++ti)
        for (std::size_t di = 0; di < threads[ti].dummies.size(); ++di) {
            NodeId d = threads[ti].dummies[di];
            NodeId prev = di == 0 ? threads[ti].a : threads[ti].dummies[di - 1];
            const auto& r = rot.at(d);
            for (int s = 0; s < 4; ++s)
                if (r[s] == prev) (*thread_of_pair)[{d, s % 2}] = static_cast<int>(ti);
        }
    return threads;
}

// Shared tail: drop dummies, wire thread edges, assemble the configuration.
std::optional<CrossingInstance> assemble_instance(
    Rng& rng, const FaceGrower& grower, const std::vector<NodeId>& dummies,
    const std::map<NodeId, std::array<NodeId, 4>>& rot, int max_graph_nodes,
    int weight_lo, int weight_hi) {
    std::map<std::pair<NodeId, int>, int> thread_of_pair;
    auto threads = build_threads(dummies, rot, &thread_of_pair);
    if (!threads) return std::nullopt;

    std::set<std::pair<int, int>> crossing_pairs;
    for (NodeId d : dummies) {
        int ta = thread_of_pair.at({d, 0});
        int tb = thread_of_pair.at({d, 1});
        if (ta == tb) return std::nullopt;
        const Thread& A = (*threads)[ta];
        const Thread& B = (*threads)[tb];
        if (A.a == B.a || A.a == B.b || A.b == B.a || A.b == B.b)
            return std::nullopt;  // adjacent edges never cross in good drawings
        if (!crossing_pairs.insert(std::minmax(ta, tb)).second)
            return std::nullopt;  // a pair may cross at most once
    }

    std::set<NodeId> is_dummy(dummies.begin(), dummies.end());
    std::vector<NodeId> gid(grower.node_count, kNoNode);
    int gn = 0;
    for (NodeId v = 0; v < grower.node_count; ++v)
        if (!is_dummy.count(v)) gid[v] = gn++;
    if (gn > max_graph_nodes || gn < 2) return std::nullopt;

    std::set<std::pair<NodeId, NodeId>> gedges;
    std::vector<std::pair<NodeId, NodeId>> edge_list;
    for (const auto& [u, v] : grower.edges) {
        if (is_dummy.count(u) || is_dummy.count(v)) continue;
        edge_list.emplace_back(gid[u], gid[v]);
        gedges.insert(std::minmax(gid[u], gid[v]));
    }
    std::vector<EdgeId> thread_edge(threads->size());
    for (std::size_t ti = 0; ti < threads->size(); ++ti) {
        const Thread& t = (*threads)[ti];
        auto key = std::minmax(gid[t.a], gid[t.b]);
        if (!gedges.insert(key).second) return std::nullopt;
        thread_edge[ti] = static_cast<EdgeId>(edge_list.size());
        edge_list.emplace_back(gid[t.a], gid[t.b]);
    }

    std::map<NodeId, int> crossing_id;
    for (std::size_t i = 0; i < dummies.size(); ++i)
        crossing_id[dummies[i]] = static_cast<int>(i);

    std::vector<Crossing> crossings;
    for (NodeId d : dummies)
        crossings.push_back({crossing_id[d], thread_edge[thread_of_pair.at({d, 0})],
                             thread_edge[thread_of_pair.at({d, 1})]});
    std::map<EdgeId, std::vector<int>> orders;
    for (std::size_t ti = 0; ti < threads->size(); ++ti) {
        const Thread& t = (*threads)[ti];
        std::vector<int> ids;
        for (NodeId d : t.dummies) ids.push_back(crossing_id[d]);
        if (gid[t.a] > gid[t.b]) std::reverse(ids.begin(), ids.end());
        orders[thread_edge[ti]] = std::move(ids);
    }

    CrossingInstance inst;
    inst.graph =
        WeightedGraph::simple(gn, weighted_edges(rng, edge_list, weight_lo, weight_hi));
    inst.config = CrossingConfiguration::of(std::move(crossings), std::move(orders));
    return inst;
}

}  // namespace

WeightedGraph random_connected_planar(Rng& rng, int target_nodes, int extra_chords,
                                      int weight_lo, int weight_hi, bool pendants) {
    if (target_nodes <= 1) return WeightedGraph::simple(std::max(target_nodes, 0), {});
    if (target_nodes == 2)
        return WeightedGraph::simple(
            2, {{0, 1, BigInt(rand_int(rng, weight_lo, weight_hi))}});

    int pendant_count = pendants ? rand_int(rng, 0, std::max(1, target_nodes / 4)) : 0;
    int core_target = std::max(3, target_nodes - pendant_count);
    FaceGrower grower(rng, 1 << 20);
    grower.grow(core_target, 0, 0, 15);
    for (int i = 0; i < extra_chords; ++i) grower.try_chord();

    std::vector<std::pair<NodeId, NodeId>> edges = grower.edges;
    int n = grower.node_count;
    while (n < target_nodes) {
        NodeId anchor = rand_int(rng, 0, n - 1);
        edges.emplace_back(anchor, n);
        ++n;
    }
    return WeightedGraph::simple(n, weighted_edges(rng, edges, weight_lo, weight_hi));
}

CrossingInstance random_crossing_instance(Rng& rng, int max_graph_nodes, int max_k,
                                          int weight_lo, int weight_hi) {
    int want_k = max_k > 0 ? rand_int(rng, 1, max_k) : 0;
    for (int attempt = 0; attempt < 400; ++attempt) {
        int skel_target = rand_int(rng, std::max(5, max_graph_nodes / 2 + want_k),
                                   max_graph_nodes + want_k);
        FaceGrower grower(rng, 1 << 20);
        grower.grow(skel_target, want_k > 0 ? 25 : 0, want_k > 1 ? 12 : 0, 8);

        std::vector<NodeId> candidates;
        std::map<NodeId, std::array<NodeId, 4>> rot;
        for (const auto& [z, r] : grower.planted) {
            candidates.push_back(z);
            rot[z] = r;
        }
        if (static_cast<int>(candidates.size()) < want_k) {
            if (attempt % 25 == 24 && want_k > 1) --want_k;
            continue;
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
        std::vector<NodeId> dummies(candidates.begin(), candidates.begin() + want_k);
        auto inst = assemble_instance(rng, grower, dummies, rot, max_graph_nodes,
                                      weight_lo, weight_hi);
        if (inst) return std::move(*inst);
        if (attempt % 25 == 24 && want_k > 1) --want_k;
    }
    CrossingInstance inst;
    inst.graph = random_connected_planar(rng, std::min(8, max_graph_nodes), 2,
                                         weight_lo, weight_hi, false);
    inst.config = CrossingConfiguration();
    return inst;
}

CrossingInstance gadget_family_instance(int k, unsigned weight_seed) {
    Rng rng(weight_seed);
    auto w = [&] { return BigInt(rand_int(rng, -5, 5)); };
    std::vector<Edge> edges;
    // fixed planar core: a 5x8 grid, large enough that the per-leaf planar
    // solve cost is dominated by the core rather than the stacked gadgets
    const int rows = 5, cols = 8;
    auto at = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({at(r, c), at(r, c + 1), w()});
            if (r + 1 < rows) edges.push_back({at(r, c), at(r + 1, c), w()});
        }
    std::vector<Crossing> crossings;
    std::map<EdgeId, std::vector<int>> orders;
    int n = rows * cols;
    const int core_n = n;
    for (int j = 0; j < k; ++j) {
        int base = n;
        n += 5;
        EdgeId first = static_cast<EdgeId>(edges.size());
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                edges.push_back({base + a, base + b, w()});
        edges.push_back({base, j % core_n, w()});  // bridge to the core
        EdgeId e02 = first + 1;                    // (base, base+2)
        EdgeId e13 = first + 5;                    // (base+1, base+3)
        crossings.push_back({j, e02, e13});
    }
    CrossingInstance inst;
    inst.graph = WeightedGraph::simple(n, std::move(edges));
    inst.config = CrossingConfiguration::of(std::move(crossings), std::move(orders));
    return inst;
}

std::optional<RealizationInstance> random_realization_instance(Rng& rng,
                                                               int max_g_nodes,
                                                               int max_k,
                                                               int weight_lo,
                                                               int weight_hi) {
    // Subcubic crossing instance as H; every planted hub becomes a crossing
    // so H itself has maximum degree 3.
    CrossingInstance h_inst;
    bool found = false;
    for (int attempt = 0; attempt < 80 && !found; ++attempt) {
        int skel_target = rand_int(rng, 7, max_g_nodes + max_k + 8);
        FaceGrower grower(rng, 3);
        grower.grow(skel_target, max_k > 0 ? 20 : 0, max_k > 1 ? 10 : 0, 30);
        std::vector<NodeId> dummies;
        std::map<NodeId, std::array<NodeId, 4>> rot;
        for (const auto& [z, r] : grower.planted) {
            dummies.push_back(z);
            rot[z] = r;
        }
        if (static_cast<int>(dummies.size()) > max_k) continue;
        auto inst = assemble_instance(rng, grower, dummies, rot, 1 << 20, weight_lo,
                                      weight_hi);
        if (!inst) continue;
        if (inst->graph.max_degree() > 3) continue;
        h_inst = std::move(*inst);
        found = true;
    }
    if (!found) return std::nullopt;

    const WeightedGraph& h0 = h_inst.graph;

    // Random split forest whose contraction stays simple: candidate edges may
    // not close a class cycle, duplicate a class pair, or share a class
    // neighborhood.
    for (int attempt = 0; attempt < 30; ++attempt) {
        std::vector<EdgeId> ids(h0.edge_count());
        for (EdgeId e = 0; e < h0.edge_count(); ++e) ids[e] = e;
        std::shuffle(ids.begin(), ids.end(), rng);
        int want_splits = rand_int(rng, 1, std::max(1, h0.node_count() / 2));

        std::vector<int> comp(h0.node_count());
        for (int i = 0; i < h0.node_count(); ++i) comp[i] = i;
        std::function<int(int)> find = [&](int x) {
            return comp[x] == x ? x : comp[x] = find(comp[x]);
        };
        std::vector<EdgeId> splits;
        std::vector<char> is_split(h0.edge_count(), 0);
        auto contraction_simple = [&]() {
            std::set<std::pair<int, int>> seen;
            for (EdgeId e = 0; e < h0.edge_count(); ++e) {
                if (is_split[e]) continue;
                int a = find(h0.edge(e).u), b = find(h0.edge(e).v);
                if (a == b) return false;
                if (!seen.insert(std::minmax(a, b)).second) return false;
            }
            return true;
        };
        for (EdgeId e : ids) {
            if (static_cast<int>(splits.size()) >= want_splits) break;
            int a = find(h0.edge(e).u), b = find(h0.edge(e).v);
            if (a == b) continue;
            comp[a] = b;
            is_split[e] = 1;
            if (contraction_simple()) {
                splits.push_back(e);
            } else {
                // undo: rebuild union-find from the accepted set
                is_split[e] = 0;
                for (int i = 0; i < h0.node_count(); ++i) comp[i] = i;
                for (EdgeId s : splits) {
                    int x = find(h0.edge(s).u), y = find(h0.edge(s).v);
                    comp[x] = y;
                }
            }
        }
        if (splits.empty()) continue;
        std::sort(splits.begin(), splits.end());

        std::map<int, NodeId> class_gid;
        std::vector<NodeId> contraction(h0.node_count());
        int gn = 0;
        for (NodeId v = 0; v < h0.node_count(); ++v) {
            int c = find(v);
            auto it = class_gid.find(c);
            if (it == class_gid.end()) it = class_gid.emplace(c, gn++).first;
            contraction[v] = it->second;
        }
        if (gn > max_g_nodes || gn < 2) continue;
        std::vector<Edge> gedges;
        for (EdgeId e = 0; e < h0.edge_count(); ++e) {
            if (std::binary_search(splits.begin(), splits.end(), e)) continue;
            gedges.push_back({contraction[h0.edge(e).u], contraction[h0.edge(e).v],
                              h0.edge(e).weight});
        }
        if (gedges.empty()) continue;

        std::vector<Edge> hedges = h0.edges();
        for (EdgeId e : splits) hedges[e].weight = BigInt(0);

        RealizationInstance out;
        out.g = WeightedGraph::simple(gn, std::move(gedges));
        out.realization.h = WeightedGraph::simple(h0.node_count(), std::move(hedges));
        out.realization.split_edges = splits;
        out.realization.contraction = std::move(contraction);
        out.config_h = h_inst.config;
        RealizationCheck check = validate_realization(out.g, out.realization);
        if (!check.ok) continue;
        return out;
    }
    return std::nullopt;
}

}  // namespace crosscut
