#ifndef CROSSCUT_MCR_HPP
#define CROSSCUT_MCR_HPP

#include <string>
#include <vector>

#include "crosscut/crossing.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/solver.hpp"

namespace crosscut {

/// A minor-crossing-number style realization: a graph H of maximum degree 3
/// whose marked split edges contract to G, node by node (each G-node's split
/// edges form a tree in H).
struct Realization {
    WeightedGraph h;
    std::vector<EdgeId> split_edges;   // sorted, duplicate-free
    std::vector<NodeId> contraction;   // H node -> G node

    bool is_split(EdgeId e) const;
};

struct RealizationCheck {
    bool ok = false;
    std::string reason;  // first failed requirement, empty when ok
};

/// Verifies that contracting the split edges of H yields exactly G (weights
/// included), that each contraction class is a split-edge tree mapping to
/// one G-node, and that H has maximum degree 3.
RealizationCheck validate_realization(const WeightedGraph& g, const Realization& r);

/// H = G with an identity contraction; valid only for subcubic G.
Realization trivial_realization(const WeightedGraph& g);

/// One node split: v keeps its other neighbors plus a fresh node v1 that
/// takes over the edges to nb1 and nb2; the new edge v-v1 is a split edge.
/// Building realizations by hand is repeated application of this.
Realization split_node(const Realization& r, NodeId v, NodeId nb1, NodeId nb2);

/// Penalty weight attached to split edges so no maximum cut uses them.
struct SplitPenalty {
    BigInt n;  // -3 * sum of |weights| of G
    static SplitPenalty of(const WeightedGraph& g);
};

/// MAX-CUT of G computed on a realization (H, X_H): split edges get the
/// penalty weight, the crossing solver runs on H, and the cut maps back
/// through the contraction (split-edge trees are monochromatic).
SolveResult solve_via_realization(const WeightedGraph& g, const Realization& r,
                                  const CrossingConfiguration& x_h,
                                  const SolveOptions& options = {});

}  // namespace crosscut

#endif
