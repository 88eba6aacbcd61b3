#include <doctest.h>

#include "lpwkit/generators.hpp"
#include "lpwkit/graph_core.hpp"
#include "test_util.hpp"

using namespace lpwkit;
using namespace lpwkit::testutil;

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), MalformedInputError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), MalformedInputError);
    CHECK_THROWS_AS(Graph(3, {Edge(1, 1)}), MalformedInputError);
    Graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_index(1, 2) == 1);
    CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("verify_path_decomposition") {
    SUBCASE("single edge, one bag") {
        Graph g(2, {{0, 1}});
        PathDecomposition d{{{0, 1}}};
        CHECK(verify_path_decomposition(g, d).ok());
    }
    SUBCASE("uncovered edge on a path") {
        Graph g(3, {{0, 1}, {1, 2}});
        PathDecomposition d{{{0, 1}, {2}}};
        Verdict v = verify_path_decomposition(g, d);
        REQUIRE_FALSE(v.ok());
        CHECK(v.violations.front().code == ViolationCode::EdgeUncovered);
        CHECK(v.violations.front().edges.front() == Edge(1, 2));
    }
    SUBCASE("broken interval") {
        Graph g(3, {});
        PathDecomposition d{{{0}, {1}, {0, 2}}};
        Verdict v = verify_path_decomposition(g, d);
        REQUIRE_FALSE(v.ok());
        CHECK(v.violations.front().code == ViolationCode::VertexIntervalBroken);
    }
    SUBCASE("vertex id out of range is malformed, not a failure") {
        Graph g(2, {{0, 1}});
        PathDecomposition d{{{0, 1, 7}}};
        CHECK_THROWS_AS(verify_path_decomposition(g, d), MalformedInputError);
    }
    SUBCASE("grid column pairs") {
        GridResult grid = gen_grid(5, true);
        CHECK(verify_path_decomposition(grid.graph, grid.decomposition.decomposition).ok());
    }
}

TEST_CASE("verify_layering") {
    Graph g(2, {{0, 1}});
    SUBCASE("same layer is allowed") {
        CHECK(verify_layering(g, Layering{{0, 0}, 1}).ok());
    }
    SUBCASE("definition boundary at s") {
        Verdict v = verify_layering(g, Layering{{0, 2}, 1});
        REQUIRE_FALSE(v.ok());
        CHECK(v.violations.front().code == ViolationCode::EdgeSpanExceeded);
        CHECK(verify_layering(g, Layering{{0, 2}, 2}).ok());
    }
    SUBCASE("missing level is malformed") {
        CHECK_THROWS_AS(verify_layering(g, Layering{{0}, 1}), MalformedInputError);
    }
}

TEST_CASE("layered_width") {
    SUBCASE("grid decomposition with row layering") {
        GridResult grid = gen_grid(5, true);
        CHECK(layered_width(grid.decomposition.decomposition, grid.decomposition.layering) == 2);
    }
    SUBCASE("single bag single vertex") {
        PathDecomposition d{{{0}}};
        Layering l{{5}, 1};
        CHECK(layered_width(d, l) == 1);
    }
    SUBCASE("K4 in one bag over two layers") {
        PathDecomposition d{{{0, 1, 2, 3}}};
        Layering l{{0, 0, 1, 1}, 1};
        CHECK(layered_width(d, l) == 2);
    }
    SUBCASE("empty decomposition") {
        CHECK(layered_width(PathDecomposition{}, Layering{{}, 1}) == 0);
    }
}

TEST_CASE("verify_track_layout") {
    SUBCASE("triangle, one vertex per track") {
        Graph g = complete_graph(3);
        TrackLayout t{{{0}, {1}, {2}}};
        CHECK(verify_track_layout(g, t).ok());
    }
    SUBCASE("X-crossing") {
        Graph g(4, {{0, 3}, {1, 2}});
        TrackLayout t{{{0, 1}, {2, 3}}};
        Verdict v = verify_track_layout(g, t);
        REQUIRE_FALSE(v.ok());
        CHECK(v.violations.front().code == ViolationCode::XCrossing);
    }
    SUBCASE("vertex in two tracks is malformed") {
        Graph g(2, {});
        TrackLayout t{{{0, 1}, {1}}};
        CHECK_THROWS_AS(verify_track_layout(g, t), MalformedInputError);
    }
    SUBCASE("missing vertex is a partition violation") {
        Graph g(2, {});
        TrackLayout t{{{0}, {}}};
        Verdict v = verify_track_layout(g, t);
        REQUIRE_FALSE(v.ok());
        CHECK(v.violations.front().code == ViolationCode::NotAPartition);
    }
    SUBCASE("intra-track edge") {
        Graph g(2, {{0, 1}});
        TrackLayout t{{{0, 1}}};
        Verdict v = verify_track_layout(g, t);
        REQUIRE_FALSE(v.ok());
        CHECK(v.violations.front().code == ViolationCode::IntraTrackEdge);
    }
}

TEST_CASE("verify_stack_layout") {
    SUBCASE("K3 in one stack") {
        Graph g = complete_graph(3);
        StackLayout s{{0, 1, 2}, {0, 0, 0}, 1};
        CHECK(verify_stack_layout(g, s).ok());
    }
    SUBCASE("canonical crossing in K4") {
        Graph g(4, {{0, 2}, {1, 3}});
        StackLayout s{{0, 1, 2, 3}, {0, 0}, 1};
        Verdict v = verify_stack_layout(g, s);
        REQUIRE_FALSE(v.ok());
        CHECK(v.violations.front().code == ViolationCode::StackCrossing);
        StackLayout two{{0, 1, 2, 3}, {0, 1}, 2};
        CHECK(verify_stack_layout(g, two).ok());
    }
    SUBCASE("unassigned edge is malformed") {
        Graph g(2, {{0, 1}});
        CHECK_THROWS_AS(verify_stack_layout(g, StackLayout{{0, 1}, {}, 0}),
                        MalformedInputError);
    }
}

TEST_CASE("crossing_pairs") {
    SUBCASE("one crossing") {
        auto pairs = crossing_pairs({0, 1, 2, 3}, {Edge(0, 2), Edge(1, 3)});
        REQUIRE(pairs.size() == 1);
    }
    SUBCASE("nested edges do not cross") {
        CHECK(crossing_pairs({0, 1, 2, 3}, {Edge(0, 3), Edge(1, 2)}).empty());
    }
    SUBCASE("matches the quadratic reference scan on random graphs") {
        Rng rng(11);
        for (int round = 0; round < 50; ++round) {
            Graph g = random_graph(8, 0.5, rng);
            std::vector<int> order(8);
            std::iota(order.begin(), order.end(), 0);
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);

            std::vector<int> pos(8);
            for (int i = 0; i < 8; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
            size_t reference = 0;
            const auto& edges = g.edges();
            for (size_t i = 0; i < edges.size(); ++i)
                for (size_t j = i + 1; j < edges.size(); ++j) {
                    int a = std::min(pos[static_cast<size_t>(edges[i].u)], pos[static_cast<size_t>(edges[i].v)]);
                    int b = std::max(pos[static_cast<size_t>(edges[i].u)], pos[static_cast<size_t>(edges[i].v)]);
                    int c = std::min(pos[static_cast<size_t>(edges[j].u)], pos[static_cast<size_t>(edges[j].v)]);
                    int d = std::max(pos[static_cast<size_t>(edges[j].u)], pos[static_cast<size_t>(edges[j].v)]);
                    bool crosses = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                    if (crosses) ++reference;
                }
            CHECK(crossing_pairs(order, edges).size() == reference);
        }
    }
}

TEST_CASE("collapse_layering") {
    SUBCASE("floor division") {
        Graph g = path_graph(4);
        Layering l{{0, 1, 2, 3}, 2};
        PathDecomposition d{{{0, 1}, {1, 2}, {2, 3}}};
        LayeredPathDecomposition out = collapse_layering(g, l, d);
        CHECK(out.layering.levels == std::vector<int>{0, 0, 1, 1});
        CHECK(out.layering.weakness == 1);
    }
    SUBCASE("floor toward minus infinity") {
        Graph g(2, {{0, 1}});
        Layering l{{-1, 0}, 2};
        PathDecomposition d{{{0, 1}}};
        LayeredPathDecomposition out = collapse_layering(g, l, d);
        CHECK(out.layering.levels == std::vector<int>{-1, 0});
        CHECK(verify_layering(g, out.layering).ok());
    }
    SUBCASE("invalid input is a precondition error") {
        Graph g(3, {{0, 1}, {1, 2}});
        PathDecomposition d{{{0, 1}}};  // vertex 2 missing
        CHECK_THROWS_AS(collapse_layering(g, Layering{{0, 0, 0}, 2}, d), PreconditionError);
    }
    SUBCASE("property: validity preserved and width(out) <= s * width(in)") {
        Rng rng(2024);
        for (int round = 0; round < 100; ++round) {
            int n = 2 + static_cast<int>(rng.below(8));
            int s = 2 + static_cast<int>(rng.below(2));
            Graph g = random_graph(n, 0.4, rng);
            Layering l = random_layering(g, s, rng);
            PathDecomposition d = random_decomposition(g, rng);
            REQUIRE(verify_path_decomposition(g, d).ok());
            REQUIRE(verify_layering(g, l).ok());
            int width_in = layered_width(d, l);
            LayeredPathDecomposition out = collapse_layering(g, l, d);
            CHECK(verify_path_decomposition(g, out.decomposition).ok());
            CHECK(verify_layering(g, out.layering).ok());
            CHECK(out.layered_width <= s * width_in);
        }
    }
}

TEST_CASE("restriction closure: verified objects restrict to induced subgraphs") {
    Rng rng(7);
    for (int round = 0; round < 25; ++round) {
        int n = 4 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, 0.5, rng);
        PathDecomposition d = random_decomposition(g, rng);
        REQUIRE(verify_path_decomposition(g, d).ok());

        // keep a random half of the vertices
        std::vector<int> keep;
        std::vector<char> kept(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            if (rng.unit() < 0.5) {
                keep.push_back(v);
                kept[static_cast<size_t>(v)] = 1;
            }
        std::vector<Edge> sub_edges;
        for (const Edge& e : g.edges())
            if (kept[static_cast<size_t>(e.u)] && kept[static_cast<size_t>(e.v)])
                sub_edges.push_back(e);
        Graph sub(n, sub_edges);

        PathDecomposition restricted;
        for (const auto& bag : d.bags) {
            std::vector<int> nb;
            for (int v : bag)
                if (kept[static_cast<size_t>(v)]) nb.push_back(v);
            restricted.bags.push_back(std::move(nb));
        }
        CHECK(verify_path_decomposition_on(sub, keep, restricted).ok());
    }
}
