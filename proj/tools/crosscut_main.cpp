#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crosscut/errors.hpp"
#include "crosscut/generator.hpp"
#include "crosscut/io.hpp"
#include "crosscut/mcr.hpp"
#include "crosscut/oracle.hpp"
#include "crosscut/solver.hpp"

namespace {

using json = nlohmann::json;
using namespace crosscut;

constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasibleConfig = 3;
constexpr int kExitNonGood = 4;
constexpr int kExitTooLarge = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

SolveOptions make_options(int parallel, const std::string& strategy) {
    SolveOptions opt;
    opt.threads = parallel;
    if (strategy == "highest")
        opt.strategy = highest_id_strategy();
    else
        opt.strategy = lowest_id_strategy();
    return opt;
}

json result_json(const SolveResult& r, const WeightedGraph& g, double wall_ms) {
    json j;
    j["feasible"] = r.feasible();
    if (r.feasible()) {
        j["value"] = r.value.to_decimal_string(g.scale_pow10());
        json side = json::array();
        for (char b : r.witness->side) side.push_back(b ? 1 : 0);
        j["witness"] = std::move(side);
    } else {
        j["value"] = "-inf";
    }
    j["branches"] = r.stats.branch_count;
    j["base_cases"] = r.stats.base_cases;
    j["max_depth"] = r.stats.max_depth;
    j["infeasible_prunes"] = r.stats.infeasible_prunes;
    j["removed_crossings"] = r.stats.removed_crossings;
    json levels = json::array();
    for (const LevelStat& l : r.stats.levels)
        levels.push_back({{"nodes", l.nodes}, {"base_ms", l.base_ms}});
    j["levels"] = std::move(levels);
    j["wall_ms"] = wall_ms;
    return j;
}

void print_result_text(const SolveResult& r, const WeightedGraph& g, double wall_ms) {
    if (!r.feasible()) {
        std::cout << "value -inf (no feasible cut)\n";
    } else {
        std::cout << "value " << r.value.to_decimal_string(g.scale_pow10()) << "\n";
        std::cout << "side";
        for (char b : r.witness->side) std::cout << ' ' << (b ? 1 : 0);
        std::cout << "\n";
    }
    if (!r.stats.removed_crossings.empty()) {
        std::cout << "removed crossings (touches):";
        for (int id : r.stats.removed_crossings) std::cout << ' ' << id;
        std::cout << "\n";
    }
    std::cout << "branches " << r.stats.branch_count << ", base cases "
              << r.stats.base_cases << ", max depth " << r.stats.max_depth
              << ", wall " << wall_ms << " ms\n";
}

int run_validate(const std::string& path, bool as_json) {
    ParsedInstance inst = parse_instance(read_file(path));
    const WeightedGraph& host = inst.realization ? inst.realization->h : inst.graph;
    bool good = is_good(host, inst.config);
    std::vector<int> removed;
    CrossingConfiguration cfg = inst.config;
    bool feasible = false;
    int k_final = cfg.k();
    for (;;) {
        ValidationResult v = validate(host, cfg);
        if (std::holds_alternative<Infeasible>(v)) break;
        if (auto* r = std::get_if<Reduced>(&v)) {
            removed.push_back(r->removed_crossing);
            cfg = std::move(r->config);
            continue;
        }
        feasible = true;
        k_final = cfg.k();
        break;
    }
    if (as_json) {
        json j;
        j["good"] = good;
        j["feasible"] = feasible;
        j["removed_crossings"] = removed;
        j["crossings"] = k_final;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (good ? "good configuration\n"
                           : "NOT good (adjacent edges cross or a pair crosses twice)\n");
        if (!removed.empty()) {
            std::cout << "removed touch crossings:";
            for (int id : removed) std::cout << ' ' << id;
            std::cout << "\n";
        }
        std::cout << (feasible ? "feasible" : "infeasible") << " with " << k_final
                  << " crossings\n";
    }
    if (!feasible) return kExitInfeasibleConfig;
    if (!good) return kExitNonGood;
    return 0;
}

int run_solve(const std::string& path, bool as_json, int parallel,
              const std::string& strategy) {
    ParsedInstance inst = parse_instance(read_file(path));
    if (inst.realization)
        throw Error("file has a realization block; use mcr-solve");
    auto t0 = std::chrono::steady_clock::now();
    SolveResult r = solve(inst.graph, inst.config, make_options(parallel, strategy));
    double wall = ms_since(t0);
    if (as_json)
        std::cout << result_json(r, inst.graph, wall).dump(2) << "\n";
    else
        print_result_text(r, inst.graph, wall);
    return 0;
}

int run_oracle(const std::string& path, bool as_json) {
    ParsedInstance inst = parse_instance(read_file(path));
    auto t0 = std::chrono::steady_clock::now();
    Cut cut = brute_force_maxcut(inst.graph);
    double wall = ms_since(t0);
    SolveResult r = SolveResult::of(std::move(cut));
    if (as_json)
        std::cout << result_json(r, inst.graph, wall).dump(2) << "\n";
    else
        print_result_text(r, inst.graph, wall);
    return 0;
}

int run_mcr_solve(const std::string& path, bool as_json, int parallel,
                  const std::string& strategy) {
    ParsedInstance inst = parse_instance(read_file(path));
    if (!inst.realization) throw Error("file has no realization block; use solve");
    auto t0 = std::chrono::steady_clock::now();
    SolveResult r = solve_via_realization(inst.graph, *inst.realization, inst.config,
                                          make_options(parallel, strategy));
    double wall = ms_since(t0);
    if (as_json)
        std::cout << result_json(r, inst.graph, wall).dump(2) << "\n";
    else
        print_result_text(r, inst.graph, wall);
    return 0;
}

int run_bench(int kmax, int reps, unsigned seed) {
    std::cout << "k,nodes,branches,base_cases,wall_ms\n";
    for (int k = 1; k <= kmax; ++k) {
        CrossingInstance inst = gadget_family_instance(k, seed);
        double best = -1;
        SolveResult r;
        for (int rep = 0; rep < reps; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            r = solve(inst.graph, inst.config);
            double wall = ms_since(t0);
            if (best < 0 || wall < best) best = wall;
        }
        std::cout << k << "," << inst.graph.node_count() << ","
                  << r.stats.branch_count << "," << r.stats.base_cases << "," << best
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact MAX-CUT for graphs drawn with few crossings"};
    app.require_subcommand(1);

    std::string path, strategy = "lowest";
    bool as_json = false;
    int parallel = 1, kmax = 8, reps = 1;
    unsigned seed = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check a crossing configuration");
    validate_cmd->add_option("file", path)->required();
    validate_cmd->add_flag("--json", as_json);

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance exactly");
    solve_cmd->add_option("file", path)->required();
    solve_cmd->add_flag("--json", as_json);
    solve_cmd->add_option("--parallel", parallel, "worker threads for branches");
    solve_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"lowest", "highest"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-check (small)");
    oracle_cmd->add_option("file", path)->required();
    oracle_cmd->add_flag("--json", as_json);

    auto* mcr_cmd = app.add_subcommand("mcr-solve", "solve through a realization");
    mcr_cmd->add_option("file", path)->required();
    mcr_cmd->add_flag("--json", as_json);
    mcr_cmd->add_option("--parallel", parallel);
    mcr_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"lowest", "highest"}));

    auto* bench_cmd = app.add_subcommand("bench", "k-scaling table as CSV");
    bench_cmd->add_option("--kmax", kmax)->check(CLI::Range(1, 14));
    bench_cmd->add_option("--reps", reps)->check(CLI::Range(1, 100));
    bench_cmd->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(path, as_json);
        if (solve_cmd->parsed()) return run_solve(path, as_json, parallel, strategy);
        if (oracle_cmd->parsed()) return run_oracle(path, as_json);
        if (mcr_cmd->parsed()) return run_mcr_solve(path, as_json, parallel, strategy);
        if (bench_cmd->parsed()) return run_bench(kmax, reps, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InfeasibleConfigError& e) {
        std::cerr << "infeasible configuration: " << e.what() << "\n";
        return kExitInfeasibleConfig;
    } catch (const NonGoodError& e) {
        std::cerr << "non-good configuration: " << e.what() << "\n";
        return kExitNonGood;
    } catch (const TooLargeError& e) {
        std::cerr << "instance too large: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
