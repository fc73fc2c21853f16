#ifndef CROSSCUT_SOLVE_RESULT_HPP
#define CROSSCUT_SOLVE_RESULT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "crosscut/graph.hpp"

namespace crosscut {

struct LevelStat {
    std::int64_t nodes = 0;    // recursion nodes seen at this depth
    double base_ms = 0.0;      // time spent in planar base-case solves
};

struct SolveStats {
    std::int64_t branch_count = 0;  // crossing splits performed
    std::int64_t base_cases = 0;    // planar leaves solved
    std::int64_t infeasible_prunes = 0;
    int max_depth = 0;
    std::vector<int> removed_crossings;  // touch reductions applied up front
    std::vector<LevelStat> levels;

    void absorb(const SolveStats& child);
};

/// Outcome of a (PF-)MAX-CUT solve. An absent witness encodes the infeasible
/// value "minus infinity"; otherwise the witness is a feasible cut whose
/// value equals `value`.
struct SolveResult {
    std::optional<Cut> witness;
    BigInt value;  // meaningful iff witness is present
    SolveStats stats;

    bool feasible() const { return witness.has_value(); }

    static SolveResult infeasible() { return {}; }
    static SolveResult of(Cut cut) {
        SolveResult r;
        r.value = cut.value;
        r.witness = std::move(cut);
        return r;
    }
    /// True when this result beats (or, being feasible, matches) `other`;
    /// ties prefer *this, which implements the deterministic T_v preference.
    bool at_least(const SolveResult& other) const {
        if (!other.feasible()) return true;
        if (!feasible()) return false;
        return value >= other.value;
    }
};

/// Big-M reduction constants of a PF instance: forcing weight for fixed
/// edges, and the objective threshold that separates feasible from
/// infeasible outcomes.
struct BigM {
    BigInt m;          // 2 * sum of |weights|
    BigInt threshold;  // m * |F| + sum of negative weights

    static BigM of(const PFInstance& inst);
};

}  // namespace crosscut

#endif
