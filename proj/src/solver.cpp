#include "crosscut/solver.hpp"

#include <chrono>
#include <future>
#include <limits>
#include <utility>

#include "crosscut/errors.hpp"
#include "crosscut/planar_maxcut.hpp"

namespace crosscut {

CrossingStrategy lowest_id_strategy() {
    return [](const Triplet& t) {
        int best = std::numeric_limits<int>::max();
        for (const Crossing& c : t.config.crossings()) best = std::min(best, c.id);
        return best;
    };
}

CrossingStrategy highest_id_strategy() {
    return [](const Triplet& t) {
        int best = std::numeric_limits<int>::min();
        for (const Crossing& c : t.config.crossings()) best = std::max(best, c.id);
        return best;
    };
}

int choose_crossing(const Triplet& t, const CrossingStrategy& strategy) {
    if (t.config.empty()) throw PreconditionError("choose_crossing: no crossings left");
    int id = (strategy ? strategy : lowest_id_strategy())(t);
    if (!t.config.has_id(id))
        throw PreconditionError("choose_crossing: strategy returned an unknown id");
    return id;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

SolveResult pf_planar_embedded(const PFInstance& inst, const RotationSystem& rot) {
    const WeightedGraph& g = inst.graph;
    BigM big = BigM::of(inst);

    if (big.m.is_zero()) {
        // all weights are zero: any feasible cut is optimal at value 0
        auto coloring = fixed_edge_two_coloring(inst);
        if (!coloring) return SolveResult::infeasible();
        return SolveResult::of(make_cut(g, std::move(*coloring)));
    }

    std::vector<Edge> raised = g.edges();
    for (EdgeId f : inst.fixed) raised[f].weight += big.m;
    WeightedGraph forced =
        WeightedGraph::simple(g.node_count(), std::move(raised), g.scale_pow10());

    Cut cut = max_cut_planar_embedded(forced, rot);
    if (cut.value < big.threshold) return SolveResult::infeasible();

    if (!is_feasible_cut(inst, cut.side))
        throw Error("internal: value above threshold but a fixed edge is uncut");
    Cut original = make_cut(g, std::move(cut.side));
    return SolveResult::of(std::move(original));
}

struct Frame {
    const SolveOptions* opt;
    int spawn_depth;  // parallel forks allowed above this depth
};

SolveResult recurse(const Frame& fr, const Triplet& t, int depth) {
    SolveStats stats;
    stats.max_depth = depth;
    if (stats.levels.size() <= static_cast<std::size_t>(depth))
        stats.levels.resize(depth + 1);
    stats.levels[depth].nodes = 1;

    if (pf_infeasible(t.instance)) {
        stats.infeasible_prunes = 1;
        SolveResult r = SolveResult::infeasible();
        r.stats = std::move(stats);
        return r;
    }

    if (auto rot = planar_embedding(t.instance.graph)) {
        auto t0 = std::chrono::steady_clock::now();
        SolveResult r = pf_planar_embedded(t.instance, *rot);
        stats.base_cases = 1;
        stats.levels[depth].base_ms = ms_since(t0);
        r.stats = std::move(stats);
        return r;
    }

    int chi = choose_crossing(t, fr.opt->strategy);
    auto [tv, tw] = crossing_split(t, chi);
    stats.branch_count = 1;

    SolveResult rv, rw;
    if (fr.opt->threads > 1 && depth < fr.spawn_depth) {
        auto fut = std::async(std::launch::async,
                              [&] { return recurse(fr, tw, depth + 1); });
        rv = recurse(fr, tv, depth + 1);
        rw = fut.get();
    } else {
        rv = recurse(fr, tv, depth + 1);
        rw = recurse(fr, tw, depth + 1);
    }
    stats.absorb(rv.stats);
    stats.absorb(rw.stats);

    // deterministic tie-break: the same-side child wins ties
    const bool take_v = rv.at_least(rw);
    SolveResult& win = take_v ? rv : rw;
    const Triplet& child = take_v ? tv : tw;
    SolveResult out;
    if (win.feasible()) {
        Cut lifted = lift_cut(t.instance, child.instance, child.lineage, *win.witness);
        out = SolveResult::of(std::move(lifted));
    }
    out.stats = std::move(stats);
    return out;
}

}  // namespace

SolveResult solve_pf_planar(const PFInstance& inst) {
    auto rot = planar_embedding(inst.graph);
    if (!rot) throw NotPlanarError("solve_pf_planar: graph is not planar");
    return pf_planar_embedded(inst, *rot);
}

SolveResult solve(const WeightedGraph& g, const CrossingConfiguration& x,
                  const SolveOptions& options) {
    if (!is_good(g, x))
        throw NonGoodError(
            "configuration is not good (adjacent edges cross or a pair crosses twice)");

    CrossingConfiguration reduced = x;
    std::vector<int> removed;
    for (;;) {
        ValidationResult v = validate(g, reduced);
        if (std::holds_alternative<Infeasible>(v))
            throw InfeasibleConfigError("crossing configuration cannot be realized");
        if (auto* r = std::get_if<Reduced>(&v)) {
            removed.push_back(r->removed_crossing);
            reduced = std::move(r->config);
            continue;
        }
        break;
    }

    SolveOptions opt = options;
    if (!opt.strategy) opt.strategy = lowest_id_strategy();
    Frame fr{&opt, 0};
    if (opt.threads > 1) {
        int d = 0;
        while ((1 << d) < opt.threads && d < reduced.k()) ++d;
        fr.spawn_depth = d;
    }

    Triplet root{PFInstance::of(g, {}), std::move(reduced), {}};
    SolveResult r = recurse(fr, root, 0);
    r.stats.removed_crossings = std::move(removed);
    if (r.feasible() && !r.witness->side.empty() && !r.witness->in_s(0)) {
        r.witness = r.witness->complemented();
    }
    return r;
}

}  // namespace crosscut
