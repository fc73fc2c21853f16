#ifndef CROSSCUT_GENERATOR_HPP
#define CROSSCUT_GENERATOR_HPP

#include <optional>
#include <random>

#include "crosscut/crossing.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/mcr.hpp"

namespace crosscut {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi);

/// Random connected planar graph grown face by face (chords + new nodes on
/// faces), optionally finished with pendant nodes so bridges and cut
/// vertices occur. Integer weights uniform in [weight_lo, weight_hi].
WeightedGraph random_connected_planar(Rng& rng, int target_nodes, int extra_chords,
                                      int weight_lo, int weight_hi,
                                      bool pendants = true);

struct CrossingInstance {
    WeightedGraph graph;
    CrossingConfiguration config;
};

/// Random instance with a feasible good crossing configuration: a planar
/// skeleton is grown with planted degree-4 nodes, a random subset of which
/// become crossings by threading the opposite edge pairs through them.
/// Multi-crossing edges arise when planted nodes are adjacent.
CrossingInstance random_crossing_instance(Rng& rng, int max_graph_nodes, int max_k,
                                          int weight_lo, int weight_hi);

/// Deterministic family for scaling runs: a fixed planar grid core plus k
/// disjoint five-clique gadgets (one unavoidable crossing each), attached by
/// bridges. Branching must visit exactly 2^k planar leaves.
CrossingInstance gadget_family_instance(int k, unsigned weight_seed = 1);

struct RealizationInstance {
    WeightedGraph g;
    Realization realization;
    CrossingConfiguration config_h;
};

/// Random graph G together with a valid realization (H, X_H): H is a random
/// subcubic crossing instance whose random split-edge forest contracts to G.
/// nullopt when the random attempt fails validity (caller retries).
std::optional<RealizationInstance> random_realization_instance(Rng& rng,
                                                               int max_g_nodes,
                                                               int max_k,
                                                               int weight_lo,
                                                               int weight_hi);

}  // namespace crosscut

#endif
