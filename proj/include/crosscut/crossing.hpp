#ifndef CROSSCUT_CROSSING_HPP
#define CROSSCUT_CROSSING_HPP

#include <map>
#include <variant>
#include <vector>

#include "crosscut/embedding.hpp"
#include "crosscut/graph.hpp"

namespace crosscut {

/// One declared crossing between two distinct edges.
struct Crossing {
    int id = -1;
    EdgeId e1 = kNoEdge;
    EdgeId e2 = kNoEdge;

    bool involves(EdgeId e) const { return e == e1 || e == e2; }
    EdgeId other(EdgeId e) const { return e == e1 ? e2 : e1; }
};

/// The crossings of a drawing: edge pairs plus, per crossed edge, the order
/// in which its crossings occur along the curve. Order lists run from the
/// edge's lower-id endpoint to its higher-id endpoint.
class CrossingConfiguration {
public:
    CrossingConfiguration() = default;

    /// Builds and checks internal consistency: unique ids, e1 != e2, every
    /// crossed edge carries a duplicate-free order list containing each of
    /// its crossings exactly once. Edges with a single crossing may omit the
    /// list (it is implied); two or more require it. Throws ConfigError.
    static CrossingConfiguration of(std::vector<Crossing> crossings,
                                    std::map<EdgeId, std::vector<int>> orders);

    int k() const { return static_cast<int>(crossings_.size()); }
    bool empty() const { return crossings_.empty(); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& by_id(int id) const;
    bool has_id(int id) const;

    /// Ordered crossing ids along edge e (empty for uncrossed edges).
    const std::vector<int>& order_of(EdgeId e) const;

    /// Copy with one crossing removed (touch reduction step).
    CrossingConfiguration without(int crossing_id) const;

    /// Graph-dependent structural checks: every referenced edge exists.
    /// Throws ConfigError.
    void check_structure(const WeightedGraph& g) const;

private:
    std::vector<Crossing> crossings_;  // sorted by id
    std::map<EdgeId, std::vector<int>> order_;
};

/// Skeleton edge: one segment of an original edge's subdivided path.
struct SkeletonEdge {
    NodeId u = kNoNode;
    NodeId v = kNoNode;
    EdgeId origin = kNoEdge;
    int segment = 0;
};

/// The graph obtained by replacing every crossing with a degree-4 dummy
/// node. Nodes 0..n-1 are the original nodes; node n+i hosts crossing i (in
/// configuration order).
struct Planarization {
    int original_node_count = 0;
    int node_count = 0;
    std::vector<SkeletonEdge> edges;
    std::vector<int> crossing_of_node;            // node -> crossing id, -1 for originals
    std::vector<std::vector<int>> segments_of_edge;  // original edge -> skeleton edge ids in order

    RawGraph raw() const;
    NodeId dummy_node(int crossing_index) const {
        return original_node_count + crossing_index;
    }
};

/// Replaces crossings by degree-4 dummies, threading each crossed edge
/// through its crossings in the stored order. Throws ConfigError on
/// structural inconsistency.
Planarization planarize(const WeightedGraph& g, const CrossingConfiguration& x);

struct Feasible {
    Planarization planarization;
    RotationSystem rotation;  // embedding of the planarization, dummies alternating
};
struct Reduced {
    CrossingConfiguration config;  // one touch removed; re-validate
    int removed_crossing = -1;
};
struct Infeasible {};

using ValidationResult = std::variant<Feasible, Reduced, Infeasible>;

/// Feasibility of a crossing configuration: Infeasible when the
/// planarization is non-planar; Reduced when a declared crossing can only
/// "touch" (its dummy cannot alternate in any embedding compatible with the
/// earlier ones); Feasible otherwise, with an embedding whose dummies all
/// alternate between the two crossing edges.
ValidationResult validate(const WeightedGraph& g, const CrossingConfiguration& x);

/// True iff no crossing joins adjacent edges and no edge pair crosses twice.
bool is_good(const WeightedGraph& g, const CrossingConfiguration& x);

}  // namespace crosscut

#endif
