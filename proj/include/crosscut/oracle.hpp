#ifndef CROSSCUT_ORACLE_HPP
#define CROSSCUT_ORACLE_HPP

#include "crosscut/graph.hpp"
#include "crosscut/solve_result.hpp"

namespace crosscut {

/// Hard cap for brute-force enumeration (2^23 bipartitions).
constexpr int kOracleMaxNodes = 24;

/// Exact MAX-CUT by enumerating all bipartitions with node 0 pinned to S.
/// Throws TooLargeError beyond kOracleMaxNodes. Deliberately dumb.
Cut brute_force_maxcut(const WeightedGraph& g);

/// Brute-force PF-MAX-CUT; infeasible result when no cut contains F.
SolveResult brute_force_pf(const PFInstance& inst);

/// Number of feasible cuts and the sorted multiset of their values (each
/// bipartition {S, V\S} counted once). Used by bijection checks.
std::vector<BigInt> feasible_cut_values(const PFInstance& inst);

}  // namespace crosscut

#endif
