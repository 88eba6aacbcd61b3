#pragma once

#include <cstdint>

#include "lpwkit/graph_core.hpp"

namespace lpwkit {

// Deterministic and seeded constructors for the example families, each paired
// with its known layout object where one exists.  Identical seed + parameters
// give byte-identical interchange documents (sequence "splitmix64/v1").

struct GridResult {
    Graph graph;
    LayeredPathDecomposition decomposition;  // bags: consecutive column pairs, layers: rows
};

/// n x n grid, one diagonal per cell when `diagonals`.  Vertex (r,c) -> r*n+c.
GridResult gen_grid(int n, bool diagonals);

struct CaterpillarResult {
    Graph graph;
    TrackLayout layout;  // 2 tracks
};

/// Caterpillar: spine path of `spine` vertices, `legs` leaves per spine vertex.
CaterpillarResult gen_caterpillar(int spine, int legs);

/// Complete binary tree of the given depth plus an apex adjacent to every tree vertex.
Graph gen_tree_plus_apex(int depth);

struct Random3TrackResult {
    Graph graph;
    TrackLayout layout;  // 3 tracks
};

/// Saturates the empty layout with the given track sizes, then keeps each edge
/// with probability `density`.  With `connected` (and density > 0), a spanning
/// connected subset of the saturation edges is always kept.
Random3TrackResult gen_random_3track(int n1, int n2, int n3, double density, uint64_t seed,
                                     bool connected = false);

/// Random maximal outerplanar graph: cycle 0..n-1 plus a seeded triangulation.
Graph gen_outerplanar(int n, uint64_t seed);

}  // namespace lpwkit
