#ifndef CROSSCUT_EMBEDDING_HPP
#define CROSSCUT_EMBEDDING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crosscut/graph.hpp"

namespace crosscut {

/// Directed half-edge: arc 2e leaves edge e's u endpoint, arc 2e+1 leaves v.
using ArcId = int;

constexpr ArcId reverse_arc(ArcId a) { return a ^ 1; }

/// Undirected node-pair list; parallel edges and self-loops are permitted.
/// Used for planarization skeletons before they are known to be simple.
struct RawGraph {
    int node_count = 0;
    std::vector<std::pair<NodeId, NodeId>> edges;

    NodeId arc_source(ArcId a) const {
        const auto& e = edges[a >> 1];
        return (a & 1) ? e.second : e.first;
    }
    NodeId arc_target(ArcId a) const {
        const auto& e = edges[a >> 1];
        return (a & 1) ? e.first : e.second;
    }
    int arc_count() const { return 2 * static_cast<int>(edges.size()); }
};

RawGraph raw_view(const WeightedGraph& g);

/// Cyclic order of outgoing arcs around every node; a combinatorial
/// embedding. Genus-0 consistency is checked by trace_faces + euler_ok.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(std::vector<std::vector<ArcId>> rot)
        : rot_(std::move(rot)) {}

    int node_count() const { return static_cast<int>(rot_.size()); }
    const std::vector<ArcId>& rotation(NodeId v) const { return rot_[v]; }

private:
    std::vector<std::vector<ArcId>> rot_;
};

struct FaceSet {
    int face_count = 0;
    std::vector<int> face_of_arc;          // arc -> face id
    std::vector<std::vector<ArcId>> faces; // walk order per face
};

/// Walks every face of the embedding (rule: after arriving along a, leave by
/// the rotation successor of reverse(a)).
FaceSet trace_faces(const RawGraph& g, const RotationSystem& rot);

/// Verifies n - m + f = 2 on every connected component with at least one
/// edge (edgeless components are trivially planar).
bool euler_ok(const RawGraph& g, const FaceSet& faces);

/// Boyer-Myrvold planarity test; returns a rotation system or nullopt when
/// the graph is not planar. Accepts multigraphs (handled by subdivision).
std::optional<RotationSystem> planar_rotation(const RawGraph& g);

/// Euler-checked embedding of a simple weighted graph.
std::optional<RotationSystem> planar_embedding(const WeightedGraph& g);

bool is_planar(const RawGraph& g);

}  // namespace crosscut

#endif
