#ifndef CROSSCUT_GRAPH_HPP
#define CROSSCUT_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "crosscut/bigint.hpp"

namespace crosscut {

using NodeId = int;
using EdgeId = int;
constexpr NodeId kNoNode = -1;
constexpr EdgeId kNoEdge = -1;

struct Edge {
    NodeId u = kNoNode;
    NodeId v = kNoNode;
    BigInt weight;

    NodeId other(NodeId x) const { return x == u ? v : u; }
    NodeId low() const { return u < v ? u : v; }
    NodeId high() const { return u < v ? v : u; }
};

/// Raw input edge; the weight is a decimal string ("7", "-3.25", ...).
struct RawEdge {
    NodeId u = kNoNode;
    NodeId v = kNoNode;
    std::string weight;
};

struct IncidentEdge {
    EdgeId edge = kNoEdge;
    NodeId to = kNoNode;
};

/// Simple undirected graph with exact integer weights and dense node ids.
/// Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Builds from an already-simple edge list. Throws PreconditionError on
    /// self-loops, parallel edges, or node ids out of [0, n).
    static WeightedGraph simple(int node_count, std::vector<Edge> edges,
                                int scale_pow10 = 0);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<IncidentEdge>& incident(NodeId v) const { return adj_[v]; }
    int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }

    /// O(min degree) lookup; kNoEdge when absent.
    EdgeId find_edge(NodeId u, NodeId v) const;

    /// Power of ten by which input decimals were scaled to integers.
    int scale_pow10() const { return scale_pow10_; }

    BigInt total_abs_weight() const;
    BigInt negative_weight_sum() const;
    int max_degree() const;

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<IncidentEdge>> adj_;
    int scale_pow10_ = 0;
};

/// Drops self-loops, merges parallel edges by weight summation, and scales
/// decimal weights to exact integers by one common power of ten.
/// loop_of[i] / merged_into[i] report what happened to raw edge i:
/// dropped loops get kNoEdge, everything else the surviving edge id.
WeightedGraph normalize_graph(int node_count, const std::vector<RawEdge>& raw,
                              std::vector<EdgeId>* raw_to_edge = nullptr,
                              int min_scale = 0);

/// Decimal places needed by the weight strings of a raw edge list.
int weight_decimal_places(const std::vector<RawEdge>& raw);

/// Integer-weight variant of normalize_graph (no rescaling).
WeightedGraph normalize_graph(int node_count, const std::vector<Edge>& raw,
                              std::vector<EdgeId>* raw_to_edge = nullptr,
                              int scale_pow10 = 0);

/// A node bipartition with its exact cut value.
struct Cut {
    std::vector<char> side;  // 1 = in S
    BigInt value;

    bool in_s(NodeId v) const { return side[v] != 0; }
    /// Complements every side bit; the value is unchanged.
    Cut complemented() const;
};

BigInt cut_value(const WeightedGraph& g, const std::vector<char>& side);
Cut make_cut(const WeightedGraph& g, std::vector<char> side);

/// MAX-CUT instance with a set of edges forced into the cut.
struct PFInstance {
    WeightedGraph graph;
    std::vector<EdgeId> fixed;  // sorted, duplicate-free

    static PFInstance of(WeightedGraph g, std::vector<EdgeId> fixed);
    bool is_fixed(EdgeId e) const;
};

/// True iff every fixed edge has its endpoints on different sides.
bool is_feasible_cut(const PFInstance& inst, const std::vector<char>& side);

/// True iff no feasible cut exists, i.e. (V, F) has an odd cycle.
bool pf_infeasible(const PFInstance& inst);

/// 2-colors the subgraph (V, F); nullopt when (V, F) is not bipartite.
/// Any returned coloring is a feasible cut for the instance.
std::optional<std::vector<char>> fixed_edge_two_coloring(const PFInstance& inst);

}  // namespace crosscut

#endif
