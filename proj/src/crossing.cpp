#include "crosscut/crossing.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "crosscut/errors.hpp"

namespace crosscut {

CrossingConfiguration CrossingConfiguration::of(
    std::vector<Crossing> crossings, std::map<EdgeId, std::vector<int>> orders) {
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
    std::map<EdgeId, std::vector<int>> expected;  // edge -> its crossing ids
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        const Crossing& c = crossings[i];
        if (i > 0 && crossings[i - 1].id == c.id)
            throw ConfigError("duplicate crossing id " + std::to_string(c.id));
        if (c.e1 == c.e2)
            throw ConfigError("crossing " + std::to_string(c.id) +
                              " names the same edge twice");
        expected[c.e1].push_back(c.id);
        expected[c.e2].push_back(c.id);
    }
    for (const auto& [e, list] : orders) {
        auto it = expected.find(e);
        if (it == expected.end())
            throw ConfigError("order given for uncrossed edge " + std::to_string(e));
        std::vector<int> sorted = list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ConfigError("order for edge " + std::to_string(e) +
                              " repeats a crossing");
        std::vector<int> want = it->second;
        std::sort(want.begin(), want.end());
        if (sorted != want)
            throw ConfigError("order for edge " + std::to_string(e) +
                              " does not list exactly its crossings");
    }
    for (const auto& [e, ids] : expected) {
        if (orders.count(e)) continue;
        if (ids.size() > 1)
            throw ConfigError("edge " + std::to_string(e) +
                              " has several crossings but no order line");
        orders[e] = ids;  // implied singleton
    }
    CrossingConfiguration x;
    x.crossings_ = std::move(crossings);
    x.order_ = std::move(orders);
    return x;
}

const Crossing& CrossingConfiguration::by_id(int id) const {
    for (const Crossing& c : crossings_)
        if (c.id == id) return c;
    throw ConfigError("no crossing with id " + std::to_string(id));
}

bool CrossingConfiguration::has_id(int id) const {
    for (const Crossing& c : crossings_)
        if (c.id == id) return true;
    return false;
}

const std::vector<int>& CrossingConfiguration::order_of(EdgeId e) const {
    static const std::vector<int> kEmpty;
    auto it = order_.find(e);
    return it == order_.end() ? kEmpty : it->second;
}

CrossingConfiguration CrossingConfiguration::without(int crossing_id) const {
    CrossingConfiguration x;
    for (const Crossing& c : crossings_)
        if (c.id != crossing_id) x.crossings_.push_back(c);
    for (const auto& [e, list] : order_) {
        std::vector<int> kept;
        for (int id : list)
            if (id != crossing_id) kept.push_back(id);
        if (!kept.empty()) x.order_[e] = std::move(kept);
    }
    return x;
}

void CrossingConfiguration::check_structure(const WeightedGraph& g) const {
    for (const Crossing& c : crossings_) {
        if (c.e1 < 0 || c.e1 >= g.edge_count() || c.e2 < 0 || c.e2 >= g.edge_count())
            throw ConfigError("crossing " + std::to_string(c.id) +
                              " references a nonexistent edge");
    }
}

Planarization planarize(const WeightedGraph& g, const CrossingConfiguration& x) {
    x.check_structure(g);
    Planarization p;
    p.original_node_count = g.node_count();
    p.node_count = g.node_count() + x.k();
    p.crossing_of_node.assign(p.node_count, -1);
    std::map<int, NodeId> dummy;  // crossing id -> skeleton node
    for (int i = 0; i < x.k(); ++i) {
        dummy[x.crossings()[i].id] = p.dummy_node(i);
        p.crossing_of_node[p.dummy_node(i)] = x.crossings()[i].id;
    }
    p.segments_of_edge.assign(g.edge_count(), {});
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::vector<int>& ids = x.order_of(e);
        NodeId prev = g.edge(e).low();
        for (std::size_t s = 0; s <= ids.size(); ++s) {
            NodeId next = (s == ids.size()) ? g.edge(e).high() : dummy.at(ids[s]);
            p.segments_of_edge[e].push_back(static_cast<int>(p.edges.size()));
            p.edges.push_back({prev, next, e, static_cast<int>(s)});
            prev = next;
        }
    }
    return p;
}

RawGraph Planarization::raw() const {
    RawGraph r;
    r.node_count = node_count;
    r.edges.reserve(edges.size());
    for (const SkeletonEdge& e : edges) r.edges.emplace_back(e.u, e.v);
    return r;
}

bool is_good(const WeightedGraph& g, const CrossingConfiguration& x) {
    x.check_structure(g);
    std::set<std::pair<EdgeId, EdgeId>> seen;
    for (const Crossing& c : x.crossings()) {
        const Edge& a = g.edge(c.e1);
        const Edge& b = g.edge(c.e2);
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
            return false;  // adjacent edges never cross in good drawings
        auto key = std::minmax(c.e1, c.e2);
        if (!seen.insert(key).second) return false;  // pair crosses twice
    }
    return true;
}

namespace {

// Where crossing `id` sits along edge e: index into the order list.
int position_on_edge(const CrossingConfiguration& x, EdgeId e, int id) {
    const auto& list = x.order_of(e);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == id) return static_cast<int>(i);
    throw ConfigError("crossing " + std::to_string(id) + " missing from its edge order");
}

}  // namespace

ValidationResult validate(const WeightedGraph& g, const CrossingConfiguration& x) {
    Planarization plan = planarize(g, x);
    RawGraph skeleton = plan.raw();
    if (!is_planar(skeleton)) return Infeasible{};

    // Grow the skeleton by replacing each dummy with a wheel whose rim pins
    // the alternating order (e1, e2, e1, e2). The wheel is 3-connected, so
    // the graph stays planar exactly when some embedding lets this crossing
    // alternate together with all previously pinned ones.
    RawGraph cur = skeleton;
    std::vector<std::array<int, 4>> rim_segments(x.k());   // segment edge ids at rim slots
    std::vector<std::array<NodeId, 4>> rim_nodes(x.k());
    for (int i = 0; i < x.k(); ++i) {
        const Crossing& c = x.crossings()[i];
        NodeId d = plan.dummy_node(i);
        int p1 = position_on_edge(x, c.e1, c.id);
        int p2 = position_on_edge(x, c.e2, c.id);
        std::array<int, 4> seg = {
            plan.segments_of_edge[c.e1][p1], plan.segments_of_edge[c.e2][p2],
            plan.segments_of_edge[c.e1][p1 + 1], plan.segments_of_edge[c.e2][p2 + 1]};
        RawGraph next = cur;
        NodeId rim0 = next.node_count;
        next.node_count += 4;
        for (int s = 0; s < 4; ++s) {
            auto& ep = next.edges[seg[s]];
            if (ep.first == d)
                ep.first = rim0 + s;
            else if (ep.second == d)
                ep.second = rim0 + s;
            else
                throw Error("internal: segment lost its dummy endpoint");
        }
        for (int s = 0; s < 4; ++s) {
            next.edges.emplace_back(rim0 + s, rim0 + (s + 1) % 4);  // rim
            next.edges.emplace_back(d, rim0 + s);                   // spoke
        }
        if (!is_planar(next))
            return Reduced{x.without(c.id), c.id};
        rim_segments[i] = seg;
        for (int s = 0; s < 4; ++s) rim_nodes[i][s] = rim0 + s;
        cur = std::move(next);
    }

    auto rot_full = planar_rotation(cur);
    if (!rot_full) throw Error("internal: wheeled skeleton lost planarity");

    // Rotation system of the plain planarization: original nodes keep their
    // arcs (segment edge ids are stable under the wheel surgery); each dummy
    // takes the cyclic order of its spokes, mapped back to segment arcs.
    std::vector<std::vector<ArcId>> rot(plan.node_count);
    for (NodeId v = 0; v < plan.original_node_count; ++v)
        rot[v] = rot_full->rotation(v);
    for (int i = 0; i < x.k(); ++i) {
        NodeId d = plan.dummy_node(i);
        for (ArcId a : rot_full->rotation(d)) {
            // a leaves d along a spoke; find which rim slot it reaches
            NodeId r = cur.arc_target(a);
            int slot = -1;
            for (int s = 0; s < 4; ++s)
                if (rim_nodes[i][s] == r) slot = s;
            if (slot < 0) throw Error("internal: dummy incident to a non-spoke");
            int seg = rim_segments[i][slot];
            const SkeletonEdge& se = plan.edges[seg];
            rot[d].push_back(se.u == d ? 2 * seg : 2 * seg + 1);
        }
    }
    RotationSystem rotation(std::move(rot));
    FaceSet fs = trace_faces(skeleton, rotation);
    if (!euler_ok(skeleton, fs))
        throw Error("internal: planarization embedding failed the Euler check");
    return Feasible{std::move(plan), std::move(rotation)};
}

}  // namespace crosscut
