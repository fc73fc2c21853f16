#ifndef CROSSCUT_IO_HPP
#define CROSSCUT_IO_HPP

#include <optional>
#include <string>

#include "crosscut/crossing.hpp"
#include "crosscut/graph.hpp"
#include "crosscut/mcr.hpp"

namespace crosscut {

/// A parsed instance file. Without a realization block, `config` describes
/// crossings of `graph`; with one, it describes crossings of the realization
/// graph H (the solver then runs on H and maps back to G).
struct ParsedInstance {
    WeightedGraph graph;  // G, normalized
    CrossingConfiguration config;
    std::optional<Realization> realization;
};

/// Line-oriented format, `#` comments:
///   nodes <n>
///   edge <id> <u> <v> <weight>          weight integer or decimal
///   crossing <id> <edge-id> <edge-id>
///   order <edge-id> <crossing-id>...    required for >= 2 crossings,
///                                       direction lower -> higher endpoint
///   realize nodes <n>
///   realize edge <id> <u> <v> <weight>
///   split <edge-id>
///   contract <H-node> <G-node>
/// Errors carry 1-based line numbers.
ParsedInstance parse_instance(const std::string& text);

/// Canonical rendering (dense ids, sorted sections); parse -> serialize ->
/// parse is a fixed point.
std::string serialize_instance(const ParsedInstance& inst);

}  // namespace crosscut

#endif
