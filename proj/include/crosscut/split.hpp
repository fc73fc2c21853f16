#ifndef CROSSCUT_SPLIT_HPP
#define CROSSCUT_SPLIT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crosscut/crossing.hpp"
#include "crosscut/graph.hpp"

namespace crosscut {

/// One graph transformation step, with enough structure to pull a child cut
/// back to the parent. Every parent node has a child image; fresh child
/// nodes have no parent.
struct NodeMap {
    std::vector<NodeId> parent_to_child;
    std::vector<NodeId> child_to_parent;  // kNoNode for fresh nodes
    std::vector<NodeId> fresh;            // child ids created by the step
    std::optional<std::pair<NodeId, NodeId>> merged;  // parent ids identified
};

/// Steps from a parent instance to a child, in application order.
using Lineage = std::vector<NodeMap>;

struct BisubdivideResult {
    PFInstance instance;
    NodeMap map;
    NodeId vbar = kNoNode;  // fresh neighbor of the anchor
    NodeId wbar = kNoNode;  // fresh neighbor of the far endpoint
    EdgeId edge_v_vbar = kNoEdge;    // weight 0, fixed
    EdgeId edge_vbar_wbar = kNoEdge; // weight 0, fixed
    EdgeId edge_wbar_w = kNoEdge;    // carries the original weight
};

/// Replaces edge e by the 3-edge path anchor - vbar - wbar - far, fixing the
/// first two edges. A fixed e is replaced in F by the weight-carrying edge.
BisubdivideResult bisubdivide(const PFInstance& inst, EdgeId e, NodeId anchor);

struct IdentifyResult {
    PFInstance instance;
    NodeMap map;
    NodeId merged_node = kNoNode;  // child id of the common entity
};

/// Merges two nodes that are neither adjacent nor share a neighbor; F is
/// retained with endpoints rewritten. Throws PreconditionError otherwise.
IdentifyResult identify(const PFInstance& inst, NodeId a, NodeId b);

/// Unit of the branching recursion.
struct Triplet {
    PFInstance instance;
    CrossingConfiguration config;
    Lineage lineage;  // from the parent triplet; empty at the root
};

/// The crossing split: bisubdivides both crossing edges and identifies the
/// fresh nodes so the first child forces the two anchor endpoints to the
/// same side and the second child to opposite sides. Each child has three
/// more nodes, four more edges, four more fixed edges, and one crossing
/// less; transferred crossings keep their order. Throws NonGoodError when
/// the crossing edges share an endpoint.
std::pair<Triplet, Triplet> crossing_split(const Triplet& t, int crossing_id);

/// Pulls child sides back through a lineage (identified nodes inherit the
/// merged side, fresh nodes are dropped).
std::vector<char> lift_sides(const Lineage& lineage, const std::vector<char>& child_sides);

/// Lifts a feasible child cut to the parent instance; value is preserved.
/// Throws PreconditionError when the child cut violates a fixed edge.
Cut lift_cut(const PFInstance& parent, const PFInstance& child,
             const Lineage& lineage, const Cut& child_cut);

}  // namespace crosscut

#endif
