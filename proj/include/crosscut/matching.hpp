#ifndef CROSSCUT_MATCHING_HPP
#define CROSSCUT_MATCHING_HPP

#include <cstddef>
#include <vector>

#include "crosscut/bigint.hpp"

namespace crosscut {

/// Index of pair (u, v), u != v, into a packed upper-triangular array.
inline std::size_t pair_index(int n, int u, int v) {
    if (u > v) { int t = u; u = v; v = t; }
    return static_cast<std::size_t>(u) * n - (static_cast<std::size_t>(u) + 1) * (u + 2) / 2 + v;
}

/// Minimum-weight perfect matching on the complete graph K_n (blossom
/// algorithm, primal-dual, O(n^3)-ish). pair_weight holds one entry per
/// unordered pair in pair_index order; weights may be negative. Returns
/// mate[v] for every vertex. Throws PreconditionError when n is odd.
std::vector<int> min_weight_perfect_matching(int n,
                                             const std::vector<BigInt>& pair_weight);

BigInt matching_weight(int n, const std::vector<BigInt>& pair_weight,
                       const std::vector<int>& mate);

}  // namespace crosscut

#endif
