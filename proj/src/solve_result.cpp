#include "crosscut/solve_result.hpp"

#include <algorithm>

namespace crosscut {

void SolveStats::absorb(const SolveStats& child) {
    branch_count += child.branch_count;
    base_cases += child.base_cases;
    infeasible_prunes += child.infeasible_prunes;
    max_depth = std::max(max_depth, child.max_depth);
    if (levels.size() < child.levels.size()) levels.resize(child.levels.size());
    for (std::size_t i = 0; i < child.levels.size(); ++i) {
        levels[i].nodes += child.levels[i].nodes;
        levels[i].base_ms += child.levels[i].base_ms;
    }
}

BigM BigM::of(const PFInstance& inst) {
    BigM b;
    b.m = BigInt(2) * inst.graph.total_abs_weight();
    b.threshold = b.m * BigInt(static_cast<long long>(inst.fixed.size())) +
                  inst.graph.negative_weight_sum();
    return b;
}

}  // namespace crosscut
