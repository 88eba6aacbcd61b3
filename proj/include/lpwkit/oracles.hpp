#pragma once

#include <optional>

#include "lpwkit/graph_core.hpp"

namespace lpwkit {

// Exact brute-force ground truth on tiny graphs.  Budgets are hard errors,
// never silent approximations.

struct OracleBudget {
    int max_vertices = 8;
    int max_layer_span = 0;      // 0: derived from the instance (n distinct values)
    double time_limit_s = 60.0;  // wall clock per query; <= 0 disables the cap
};

struct StackNumberResult {
    int value = 0;
    StackLayout witness;
};

/// Minimum over all vertex orders of the chromatic number of the
/// crossing-conflict graph of the edges.
StackNumberResult exact_stack_number(const Graph& g, const OracleBudget& b = {});

struct LayeredPathwidthResult {
    int value = 0;
    LayeredPathDecomposition witness;
};

/// Minimum layered width over all layerings (canonicalised to min level 0)
/// and all path decompositions, by subset dynamic programming.
LayeredPathwidthResult exact_layered_pathwidth(const Graph& g, const OracleBudget& b = {});

/// Same with the edge constraint |Δℓ| <= s.
LayeredPathwidthResult exact_weak_layered_pathwidth(const Graph& g, int s,
                                                    const OracleBudget& b = {});

/// Exhaustive search for a 3-track layout; returns a verified witness or nothing.
std::optional<TrackLayout> has_3track_layout(const Graph& g, const OracleBudget& b = {});

}  // namespace lpwkit
