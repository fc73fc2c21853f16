#ifndef CROSSCUT_TJOIN_HPP
#define CROSSCUT_TJOIN_HPP

#include <vector>

#include "crosscut/graph.hpp"

namespace crosscut {

/// Undirected multigraph (parallel edges and self-loops allowed); the dual of
/// an embedded planar graph lives here.
struct MultiGraph {
    int node_count = 0;
    std::vector<Edge> edges;
};

/// Minimum-weight T-join: an edge set with odd degree exactly at the nodes of
/// T. Requires nonnegative weights and an even number of T-nodes in every
/// connected component (throws PreconditionError otherwise). Classical
/// reduction: shortest paths among T, minimum-weight perfect matching on the
/// distance graph, symmetric difference of the matched paths.
std::vector<EdgeId> min_weight_t_join(const MultiGraph& g,
                                      const std::vector<NodeId>& terminals);

BigInt edge_set_weight(const MultiGraph& g, const std::vector<EdgeId>& edges);

}  // namespace crosscut

#endif
