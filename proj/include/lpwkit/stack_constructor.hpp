#pragma once

#include "lpwkit/graph_core.hpp"

namespace lpwkit {

// Construction of a stack layout with at most 4k stacks from a width-k
// layered path decomposition.

/// Path decomposition in which every vertex has a distinct first bag.
/// first_bag induces the total order ≺_B used everywhere downstream.
struct LeftNormalDecomposition {
    PathDecomposition decomposition;
    std::vector<int> first_bag;  // indexed by vertex id

    bool before(int v, int w) const {
        return first_bag[static_cast<size_t>(v)] < first_bag[static_cast<size_t>(w)];
    }
};

/// Total order: lower layer first; within an even layer ascending ≺_B,
/// within an odd layer descending ≺_B.
struct SnakeOrder {
    std::vector<int> order;
};

/// (layer parity, slope bit, colour of the ≺_B-left endpoint).
struct StackColour {
    int parity = 0;  // ℓ(left) mod 2
    int slope = 0;   // 1 iff ℓ(left) == ℓ(right) + 1
    int colour = 0;  // 1..k

    auto operator<=>(const StackColour&) const = default;
};

/// Splits every bag that introduces m >= 2 vertices into m bags, introducing
/// the new vertices in ascending id order.  Drops empty and consecutive
/// duplicate bags first.  Never increases the layered width.
LeftNormalDecomposition left_normalize(const Graph& g, const PathDecomposition& d,
                                       const Layering& l);

/// Requires an ordinary (weakness-1) layering.
SnakeOrder snake_order(const Graph& g, const LeftNormalDecomposition& lnd, const Layering& l);

/// Greedy interval colouring per layer: two vertices of one layer sharing any
/// bag get different colours; at most `width` colours.  Returns colours 1..k
/// indexed by vertex (0 for vertices of an empty graph is impossible: every
/// vertex is in some bag).
std::vector<int> layer_local_colouring(const Graph& g, const LeftNormalDecomposition& lnd,
                                       const Layering& l, int width);

/// Full pipeline; the result always passes verify_stack_layout and uses at
/// most 4 * layered_width(d, l) stacks.
StackLayout build_stack_layout(const Graph& g, const PathDecomposition& d, const Layering& l);

/// Colour triple assigned to an edge by the construction (exposed for tests).
StackColour edge_stack_colour(const LeftNormalDecomposition& lnd, const Layering& l,
                              const std::vector<int>& vertex_colour, const Edge& e);

}  // namespace lpwkit
