#ifndef CROSSCUT_SOLVER_HPP
#define CROSSCUT_SOLVER_HPP

#include <functional>

#include "crosscut/crossing.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/solve_result.hpp"
#include "crosscut/split.hpp"

namespace crosscut {

/// Picks the crossing to eliminate next; any valid choice is correct, so
/// this is purely a performance/determinism hook.
using CrossingStrategy = std::function<int(const Triplet&)>;

CrossingStrategy lowest_id_strategy();
CrossingStrategy highest_id_strategy();

/// Applies a strategy with validation; throws PreconditionError when the
/// triplet has no crossings or the strategy returns an unknown id.
int choose_crossing(const Triplet& t, const CrossingStrategy& strategy);

struct SolveOptions {
    CrossingStrategy strategy;  // default: lowest id
    int threads = 1;            // > 1 evaluates branches concurrently
};

/// PF-MAX-CUT on a planar instance via the big-M reduction: raise fixed-edge
/// weights to M, run the planar engine, read feasibility off the threshold
/// M*|F| + (sum of negative weights). Fixed edges are expected to carry
/// weight 0 (the recursion guarantees it). Throws NotPlanarError.
SolveResult solve_pf_planar(const PFInstance& inst);

/// Exact MAX-CUT of a graph drawn with the given crossing configuration.
/// Requires a good configuration; touch reductions are applied up front and
/// reported in the stats. Branches on crossings (two children per split),
/// solves planar leaves via solve_pf_planar, lifts the winning cut back.
/// The witness is normalized so node 0 lies in S.
SolveResult solve(const WeightedGraph& g, const CrossingConfiguration& x,
                  const SolveOptions& options = {});

}  // namespace crosscut

#endif
