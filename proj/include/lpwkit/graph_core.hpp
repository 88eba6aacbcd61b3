#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpwkit/errors.hpp"

namespace lpwkit {

/// Unordered edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Throws MalformedInputError on out-of-range ids, self-loops or duplicates.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_.at(v); }

    bool has_edge(int u, int v) const;
    /// Index of an edge in the canonical (lexicographically sorted) edge list, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, unique
    std::vector<std::vector<int>> adj_;  // sorted neighbour lists
};

/// Vertex -> level map with a declared weakness s (s = 1 is an ordinary layering).
struct Layering {
    std::vector<int> levels;  // indexed by vertex id
    int weakness = 1;

    int level(int v) const { return levels.at(static_cast<size_t>(v)); }
};

/// Ordered bag sequence.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;  // each bag sorted ascending
};

struct LayeredPathDecomposition {
    PathDecomposition decomposition;
    Layering layering;
    int layered_width = 0;
};

/// Partition of the vertices into t ordered tracks.
struct TrackLayout {
    std::vector<std::vector<int>> tracks;

    int track_count() const noexcept { return static_cast<int>(tracks.size()); }
};

/// Total vertex order plus an edge -> stack assignment (indexed like Graph::edges()).
struct StackLayout {
    std::vector<int> order;
    std::vector<int> stack_of_edge;
    int stack_count = 0;
};

/// Crossing-free drawing on parallel levels; every edge joins consecutive levels.
/// Vertices keep the ids of the host graph; only `vertices` are part of the drawing.
struct LevelledDrawing {
    Graph graph;                          // same id space as the host graph, G-P edges only
    std::vector<int> vertices;            // vertices present in the drawing
    std::vector<int> level_of;            // indexed by vertex id; meaningful for `vertices`
    std::map<int, std::vector<int>> rows; // level -> vertices in within-level order
};

// ---------------------------------------------------------------------------
// Verdicts

enum class ViolationCode {
    EdgeUncovered,
    VertexIntervalBroken,
    VertexNotInAnyBag,
    EdgeSpanExceeded,
    NotAPartition,
    IntraTrackEdge,
    XCrossing,
    StackCrossing,
    EdgeSpanNotOne,
    DrawingCrossing,
    WidthMismatch,
};

std::string violation_code_name(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string message;
    std::vector<int> vertices;  // offending vertices, if any
    std::vector<Edge> edges;    // offending edges, if any
};

struct Verdict {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

// ---------------------------------------------------------------------------
// Verifiers and width computations.  These are the ground truth every
// constructive module is checked against; they share no code with the
// constructions.

Verdict verify_path_decomposition(const Graph& g, const PathDecomposition& d);
Verdict verify_layering(const Graph& g, const Layering& l);
Verdict verify_track_layout(const Graph& g, const TrackLayout& t);
Verdict verify_stack_layout(const Graph& g, const StackLayout& s);
Verdict verify_layered_path_decomposition(const Graph& g, const LayeredPathDecomposition& lpd);
Verdict verify_levelled_drawing(const LevelledDrawing& d);

/// Maximum |bag ∩ layer| over all bags and layers; 0 for an empty decomposition.
int layered_width(const PathDecomposition& d, const Layering& l);

/// Exactly the pairs (vw, xy) with v ≺ x ≺ w ≺ y after normalising each edge
/// to (earlier, later).  Shared predicate of the stack verifier and the oracle.
std::vector<std::pair<Edge, Edge>> crossing_pairs(const std::vector<int>& order,
                                                  const std::vector<Edge>& edges);

/// Lemma-3 collapse: same bags, levels floored by s (toward -infinity).
/// Requires (l, d) to be a valid s-weak layered path decomposition of g.
LayeredPathDecomposition collapse_layering(const Graph& g, const Layering& l,
                                           const PathDecomposition& d);

// Restricted checks used by the recursive pipeline: validity of objects that
// live on an induced sub-layout (only `vertices` of g are considered).
Verdict verify_path_decomposition_on(const Graph& g, const std::vector<int>& vertices,
                                     const PathDecomposition& d);
Verdict verify_layering_on(const Graph& g, const std::vector<int>& vertices, const Layering& l);
int layered_width_on(const std::vector<int>& vertices, const PathDecomposition& d,
                     const Layering& l);

}  // namespace lpwkit
