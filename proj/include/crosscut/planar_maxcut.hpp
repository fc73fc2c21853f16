#ifndef CROSSCUT_PLANAR_MAXCUT_HPP
#define CROSSCUT_PLANAR_MAXCUT_HPP

#include <vector>

#include "crosscut/embedding.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/tjoin.hpp"

namespace crosscut {

/// Geometric dual of an embedded planar graph: one node per face, one edge
/// per primal edge (same index), bridges becoming self-loops.
struct DualGraph {
    MultiGraph graph;               // dual edge i corresponds to primal edge i
    std::vector<int> face_of_arc;   // primal arc -> dual node (face)
    int face_count = 0;
};

DualGraph dual_graph(const WeightedGraph& g, const RotationSystem& rot);

/// Reconstructs node sides from a cut edge set by parity propagation.
/// Throws Error when the edge set is not a cut.
std::vector<char> recover_partition(const WeightedGraph& g,
                                    const std::vector<char>& in_cut);

/// Exact MAX-CUT on a planar graph: cuts correspond to even edge sets of the
/// dual, solved by a minimum-|weight| T-join on the duals of the positive
/// edges. Throws NotPlanarError. Disconnected inputs are solved per
/// component.
Cut max_cut_planar(const WeightedGraph& g);

/// Same, with a precomputed embedding (weights are free to differ from the
/// embedding's source as long as the structure matches).
Cut max_cut_planar_embedded(const WeightedGraph& g, const RotationSystem& rot);

}  // namespace crosscut

#endif
