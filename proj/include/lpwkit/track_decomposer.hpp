#pragma once

#include <array>
#include <optional>
#include <variant>

#include <json.hpp>

#include "lpwkit/graph_core.hpp"

namespace lpwkit {

// Constructive pipeline from a 3-track layout to a layered path decomposition
// of width at most 4: saturate the layout, walk a greedy spiral path, assign
// a 2-weak layering, decompose the levelled remainder at width 1, merge, and
// collapse.  One-per-track triangles discovered mid-walk split the instance
// and the two halves recurse.

/// Fixed 3-track layout plus the graph including all saturation edges.
struct SaturatedTrackLayout {
    TrackLayout layout;
    Graph graph;
    std::vector<Edge> added_edges;  // in deterministic scan order
};

/// Greedy spiral path: vertices[i] lies on track track_rotation[i mod 3] and
/// per-track subsequences strictly increase in track order.
struct SpiralPath {
    std::vector<int> vertices;
    std::array<int, 3> track_rotation{0, 1, 2};  // role r -> layout track index
};

/// One-per-track triangle returned when the walk closes a cycle before
/// reaching the outer triple; the recursion splits the layout here.
struct CutTriangle {
    std::array<int, 3> vertices;  // in path order (consecutive tracks)
};

/// Width-2 2-weak layered path decomposition with the boundary bags pinned.
struct WeakLayeredResult {
    PathDecomposition decomposition;
    Layering layering;                 // weakness 2
    std::array<int, 3> first_triple{}; // per layout track: the track minima
    std::array<int, 3> last_triple{};  // per layout track: the track maxima
};

enum class ObservationCase { EdgePresent, FarCrossingEdge, FurtherNeighbour };

struct ObservationWitness {
    ObservationCase tag;
    Edge witness;
};

/// Layout-relative saturation to a fixpoint: scan track pairs (1,2),(2,3),(1,3),
/// lexicographic within a pair, adding every edge that creates no X-crossing,
/// until a full pass adds nothing.
SaturatedTrackLayout saturate(const Graph& g, const TrackLayout& t);

/// First applicable case, with a witness edge, for two vertices on distinct
/// tracks of a saturated layout.
ObservationWitness observation_case(const SaturatedTrackLayout& s, int a, int b);

/// Greedy spiral from the first vertex of track 1 (identity rotation).
/// Requires all tracks non-empty and |V| >= 5; decompose_3track handles
/// smaller inputs directly.
std::variant<SpiralPath, CutTriangle> build_spiral(const SaturatedTrackLayout& s);

/// Path vertices get their path index as layer; every non-path vertex gets the
/// layer of its immediate successor (next path vertex on its own track).
Layering assign_weak_layering(const SaturatedTrackLayout& s, const SpiralPath& p);

/// Levelled drawing of G - P: level = layer, within-level order = track order.
LevelledDrawing unfold_remainder(const SaturatedTrackLayout& s, const SpiralPath& p,
                                 const Layering& l);

/// Width-1 layered path decomposition of a levelled drawing (frontier sweep;
/// output is checked against the graph-core verifiers).
LayeredPathDecomposition levelled_width1_decomposition(const LevelledDrawing& d);

/// Adds V(P) to every bag and pins the boundary bags B_0 and B_{p+1}.
WeakLayeredResult merge_with_path(const SaturatedTrackLayout& s,
                                  const LayeredPathDecomposition& wd, const SpiralPath& p,
                                  const Layering& l);

struct TrackPipelineResult {
    LayeredPathDecomposition decomposition;  // ordinary (weakness 1), width <= 4
    std::optional<WeakLayeredResult> weak;   // intermediate result of the main pipeline
    std::optional<SaturatedTrackLayout> saturated;
    nlohmann::json trace;  // stage-by-stage record (filled when requested)
};

/// Top-level driver.  The output decomposition is valid for the original graph
/// (saturation edges are used during construction and dropped from coverage).
LayeredPathDecomposition decompose_3track(const Graph& g, const TrackLayout& t);

TrackPipelineResult decompose_3track_full(const Graph& g, const TrackLayout& t,
                                          bool want_trace = false);

}  // namespace lpwkit
