#include "crosscut/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "crosscut/errors.hpp"

namespace crosscut {

WeightedGraph WeightedGraph::simple(int node_count, std::vector<Edge> edges,
                                    int scale_pow10) {
    WeightedGraph g;
    g.node_count_ = node_count;
    g.scale_pow10_ = scale_pow10;
    g.adj_.assign(node_count, {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
            throw PreconditionError("edge endpoint out of range");
        if (e.u == e.v) throw PreconditionError("self-loop in simple graph");
        for (const IncidentEdge& inc : g.adj_[e.u])
            if (inc.to == e.v) throw PreconditionError("parallel edge in simple graph");
        g.adj_[e.u].push_back({static_cast<EdgeId>(i), e.v});
        g.adj_[e.v].push_back({static_cast<EdgeId>(i), e.u});
    }
    g.edges_ = std::move(edges);
    return g;
}

EdgeId WeightedGraph::find_edge(NodeId u, NodeId v) const {
    if (u < 0 || u >= node_count_ || v < 0 || v >= node_count_) return kNoEdge;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    NodeId want = adj_[u].size() <= adj_[v].size() ? v : u;
    for (const IncidentEdge& inc : a)
        if (inc.to == want) return inc.edge;
    return kNoEdge;
}

BigInt WeightedGraph::total_abs_weight() const {
    BigInt s;
    for (const Edge& e : edges_) s += e.weight.abs();
    return s;
}

BigInt WeightedGraph::negative_weight_sum() const {
    BigInt s;
    for (const Edge& e : edges_)
        if (e.weight.sign() < 0) s += e.weight;
    return s;
}

int WeightedGraph::max_degree() const {
    int d = 0;
    for (NodeId v = 0; v < node_count_; ++v) d = std::max(d, degree(v));
    return d;
}

namespace {

// Splits a decimal weight string into (sign, integer digits, fraction digits).
void split_decimal(const std::string& s, bool& neg, std::string& int_part,
                   std::string& frac_part) {
    std::size_t i = 0;
    neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::size_t dot = s.find('.', i);
    int_part = s.substr(i, dot == std::string::npos ? std::string::npos : dot - i);
    frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw PreconditionError("malformed weight: '" + s + "'");
    for (const std::string* part : {&int_part, &frac_part})
        for (char c : *part)
            if (c < '0' || c > '9')
                throw PreconditionError("malformed weight: '" + s + "'");
}

WeightedGraph merge_simple(int node_count, const std::vector<Edge>& scaled,
                           std::vector<EdgeId>* raw_to_edge, int scale) {
    std::map<std::pair<NodeId, NodeId>, EdgeId> slot;
    std::vector<Edge> out;
    if (raw_to_edge) raw_to_edge->assign(scaled.size(), kNoEdge);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        Edge e = scaled[i];
        if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
            throw PreconditionError("node id out of range");
        if (e.u == e.v) continue;  // self-loops are never in any cut
        auto key = std::minmax(e.u, e.v);
        auto it = slot.find(key);
        if (it == slot.end()) {
            slot.emplace(key, static_cast<EdgeId>(out.size()));
            if (raw_to_edge) (*raw_to_edge)[i] = static_cast<EdgeId>(out.size());
            out.push_back(e);
        } else {
            out[it->second].weight += e.weight;
            if (raw_to_edge) (*raw_to_edge)[i] = it->second;
        }
    }
    return WeightedGraph::simple(node_count, std::move(out), scale);
}

}  // namespace

int weight_decimal_places(const std::vector<RawEdge>& raw) {
    int scale = 0;
    for (const RawEdge& e : raw) {
        bool n;
        std::string i, f;
        split_decimal(e.weight, n, i, f);
        scale = std::max(scale, static_cast<int>(f.size()));
    }
    return scale;
}

WeightedGraph normalize_graph(int node_count, const std::vector<RawEdge>& raw,
                              std::vector<EdgeId>* raw_to_edge, int min_scale) {
    int scale = min_scale;
    std::vector<bool> neg(raw.size());
    std::vector<std::string> ints(raw.size()), fracs(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool n;
        split_decimal(raw[i].weight, n, ints[i], fracs[i]);
        neg[i] = n;
        scale = std::max(scale, static_cast<int>(fracs[i].size()));
    }
    std::vector<Edge> scaled(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::string digits = ints[i] + fracs[i];
        if (digits.empty()) digits = "0";
        BigInt w = BigInt::from_decimal(digits) *
                   BigInt::pow10(scale - static_cast<int>(fracs[i].size()));
        scaled[i] = {raw[i].u, raw[i].v, neg[i] ? -w : w};
    }
    return merge_simple(node_count, scaled, raw_to_edge, scale);
}

WeightedGraph normalize_graph(int node_count, const std::vector<Edge>& raw,
                              std::vector<EdgeId>* raw_to_edge, int scale_pow10) {
    return merge_simple(node_count, raw, raw_to_edge, scale_pow10);
}

Cut Cut::complemented() const {
    Cut c = *this;
    for (char& b : c.side) b = b ? 0 : 1;
    return c;
}

BigInt cut_value(const WeightedGraph& g, const std::vector<char>& side) {
    BigInt v;
    for (const Edge& e : g.edges())
        if (side[e.u] != side[e.v]) v += e.weight;
    return v;
}

Cut make_cut(const WeightedGraph& g, std::vector<char> side) {
    Cut c;
    c.value = cut_value(g, side);
    c.side = std::move(side);
    return c;
}

PFInstance PFInstance::of(WeightedGraph g, std::vector<EdgeId> fixed) {
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    for (EdgeId e : fixed)
        if (e < 0 || e >= g.edge_count())
            throw PreconditionError("fixed edge id out of range");
    return PFInstance{std::move(g), std::move(fixed)};
}

bool PFInstance::is_fixed(EdgeId e) const {
    return std::binary_search(fixed.begin(), fixed.end(), e);
}

bool is_feasible_cut(const PFInstance& inst, const std::vector<char>& side) {
    for (EdgeId f : inst.fixed) {
        const Edge& e = inst.graph.edge(f);
        if (side[e.u] == side[e.v]) return false;
    }
    return true;
}

std::optional<std::vector<char>> fixed_edge_two_coloring(const PFInstance& inst) {
    const int n = inst.graph.node_count();
    std::vector<std::vector<NodeId>> fadj(n);
    for (EdgeId f : inst.fixed) {
        const Edge& e = inst.graph.edge(f);
        fadj[e.u].push_back(e.v);
        fadj[e.v].push_back(e.u);
    }
    std::vector<char> color(n, -1);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : fadj[u]) {
                if (color[w] == -1) {
                    color[w] = color[u] ? 0 : 1;
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;  // odd cycle in F
                }
            }
        }
    }
    return color;
}

bool pf_infeasible(const PFInstance& inst) {
    return !fixed_edge_two_coloring(inst).has_value();
}

}  // namespace crosscut
