#include "crosscut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "crosscut/errors.hpp"

namespace crosscut {

namespace {

// Gray-code sweep over all bipartitions with node 0 pinned to S. Each step
// flips one node and patches the running value in O(degree). Visit receives
// (side, value, feasible) after every step including the initial state.
template <typename Value, typename Visit>
void sweep(const PFInstance& inst, const std::vector<Value>& weight, Visit&& visit) {
    const WeightedGraph& g = inst.graph;
    const int n = g.node_count();
    std::vector<char> side(n, 0);
    std::vector<char> fixed_mask(g.edge_count(), 0);
    for (EdgeId f : inst.fixed) fixed_mask[f] = 1;

    Value value{};
    int uncut_fixed = static_cast<int>(inst.fixed.size());
    visit(side, value, uncut_fixed == 0);
    if (n <= 1) return;

    const std::uint64_t steps = 1ULL << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        NodeId j = std::countr_zero(i) + 1;
        for (const IncidentEdge& inc : g.incident(j)) {
            if (side[inc.to] == side[j]) {
                value += weight[inc.edge];  // edge enters the cut
                if (fixed_mask[inc.edge]) --uncut_fixed;
            } else {
                value -= weight[inc.edge];
                if (fixed_mask[inc.edge]) ++uncut_fixed;
            }
        }
        side[j] = side[j] ? 0 : 1;
        visit(side, value, uncut_fixed == 0);
    }
}

bool int64_safe(const WeightedGraph& g) {
    BigInt total = g.total_abs_weight();
    return total < BigInt(std::numeric_limits<long long>::max() / 4);
}

SolveResult best_feasible(const PFInstance& inst) {
    const WeightedGraph& g = inst.graph;
    if (g.node_count() > kOracleMaxNodes)
        throw TooLargeError("brute force capped at " +
                            std::to_string(kOracleMaxNodes) + " nodes");
    bool found = false;
    std::vector<char> best_side;
    if (int64_safe(g)) {
        std::vector<long long> w(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = g.edge(e).weight.to_int64();
        long long best = 0;
        sweep(inst, w, [&](const std::vector<char>& side, long long v, bool ok) {
            if (ok && (!found || v > best)) {
                found = true;
                best = v;
                best_side = side;
            }
        });
    } else {
        std::vector<BigInt> w(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = g.edge(e).weight;
        BigInt best;
        sweep(inst, w, [&](const std::vector<char>& side, const BigInt& v, bool ok) {
            if (ok && (!found || v > best)) {
                found = true;
                best = v;
                best_side = side;
            }
        });
    }
    if (!found) return SolveResult::infeasible();
    if (!best_side.empty() && !best_side[0]) {
        // node 0 is pinned to S; report S as the 1-side
        for (char& b : best_side) b = b ? 0 : 1;
    }
    return SolveResult::of(make_cut(g, std::move(best_side)));
}

}  // namespace

Cut brute_force_maxcut(const WeightedGraph& g) {
    SolveResult r = best_feasible(PFInstance::of(g, {}));
    return *r.witness;
}

SolveResult brute_force_pf(const PFInstance& inst) {
    return best_feasible(inst);
}

std::vector<BigInt> feasible_cut_values(const PFInstance& inst) {
    const WeightedGraph& g = inst.graph;
    if (g.node_count() > kOracleMaxNodes)
        throw TooLargeError("brute force capped at " +
                            std::to_string(kOracleMaxNodes) + " nodes");
    std::vector<BigInt> values;
    if (int64_safe(g)) {
        std::vector<long long> w(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = g.edge(e).weight.to_int64();
        sweep(inst, w, [&](const std::vector<char>&, long long v, bool ok) {
            if (ok) values.emplace_back(v);
        });
    } else {
        std::vector<BigInt> w(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = g.edge(e).weight;
        sweep(inst, w, [&](const std::vector<char>&, const BigInt& v, bool ok) {
            if (ok) values.push_back(v);
        });
    }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace crosscut
