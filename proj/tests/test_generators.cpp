#include <doctest.h>

#include "lpwkit/generators.hpp"
#include "lpwkit/json_io.hpp"
#include "lpwkit/oracles.hpp"
#include "lpwkit/track_decomposer.hpp"
#include "test_util.hpp"

using namespace lpwkit;
using namespace lpwkit::testutil;

TEST_CASE("gen_grid") {
    SUBCASE("n=1 is a single vertex of width 1") {
        GridResult g = gen_grid(1, true);
        CHECK(g.graph.vertex_count() == 1);
        CHECK(g.decomposition.layered_width == 1);
        CHECK(verify_layered_path_decomposition(g.graph, g.decomposition).ok());
    }
    SUBCASE("5x5 with diagonals: 25 vertices, 40 grid + 16 diagonal edges, width 2") {
        GridResult g = gen_grid(5, true);
        CHECK(g.graph.vertex_count() == 25);
        CHECK(g.graph.edge_count() == 40 + 16);
        CHECK(g.decomposition.layered_width == 2);
        CHECK(verify_layered_path_decomposition(g.graph, g.decomposition).ok());
    }
    SUBCASE("4x4 without diagonals verifies at width <= 2") {
        GridResult g = gen_grid(4, false);
        CHECK(verify_layered_path_decomposition(g.graph, g.decomposition).ok());
        CHECK(g.decomposition.layered_width <= 2);
    }
}

TEST_CASE("gen_caterpillar") {
    SUBCASE("single vertex") {
        CaterpillarResult c = gen_caterpillar(1, 0);
        CHECK(c.graph.vertex_count() == 1);
        CHECK(verify_track_layout(c.graph, c.layout).ok());
    }
    SUBCASE("spine 3, one leg each: 6 vertices, valid 2-track witness") {
        CaterpillarResult c = gen_caterpillar(3, 1);
        CHECK(c.graph.vertex_count() == 6);
        CHECK(c.layout.track_count() == 2);
        CHECK(verify_track_layout(c.graph, c.layout).ok());
    }
    SUBCASE("spine 5, two legs each: witness verifies; 3-track witness exists") {
        CaterpillarResult c = gen_caterpillar(5, 2);
        CHECK(c.graph.vertex_count() == 15);
        CHECK(verify_track_layout(c.graph, c.layout).ok());
        OracleBudget b;
        b.max_vertices = 15;
        b.time_limit_s = 30.0;
        auto w = has_3track_layout(c.graph, b);
        REQUIRE(w.has_value());
        CHECK(verify_track_layout(c.graph, *w).ok());
    }
}

TEST_CASE("gen_tree_plus_apex") {
    SUBCASE("depth 0 is a single edge") {
        Graph g = gen_tree_plus_apex(0);
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("depth 2: 8 vertices, stack number 2, layered pathwidth 2") {
        Graph g = gen_tree_plus_apex(2);
        CHECK(g.vertex_count() == 8);
        CHECK(exact_stack_number(g).value == 2);
        CHECK(exact_layered_pathwidth(g).value >= 2);
    }
}

TEST_CASE("gen_random_3track") {
    SUBCASE("density 1 reproduces the saturation") {
        Random3TrackResult r = gen_random_3track(3, 3, 3, 1.0, 7);
        SaturatedTrackLayout sat = saturate(Graph(9, {}), r.layout);
        CHECK(r.graph == sat.graph);
        CHECK(verify_track_layout(r.graph, r.layout).ok());
    }
    SUBCASE("density 0 is edgeless but valid") {
        Random3TrackResult r = gen_random_3track(2, 2, 2, 0.0, 7);
        CHECK(r.graph.edge_count() == 0);
        CHECK(verify_track_layout(r.graph, r.layout).ok());
    }
    SUBCASE("connected flag keeps a spanning connected subgraph") {
        Random3TrackResult r = gen_random_3track(5, 5, 5, 0.2, 13, true);
        CHECK(component_count(r.graph, {}) == 1);
        CHECK(verify_track_layout(r.graph, r.layout).ok());
    }
    SUBCASE("seeded corpus instance decomposes at width <= 4") {
        Random3TrackResult r = gen_random_3track(20, 20, 20, 0.7, 42);
        CHECK(verify_track_layout(r.graph, r.layout).ok());
        LayeredPathDecomposition out = decompose_3track(r.graph, r.layout);
        CHECK(out.layered_width <= 4);
        CHECK(verify_layered_path_decomposition(r.graph, out).ok());
    }
    SUBCASE("determinism: identical seeds give byte-identical documents") {
        Random3TrackResult a = gen_random_3track(6, 5, 4, 0.5, 99);
        Random3TrackResult b = gen_random_3track(6, 5, 4, 0.5, 99);
        CHECK(dump_document(to_json(a.graph)) == dump_document(to_json(b.graph)));
        Random3TrackResult c = gen_random_3track(6, 5, 4, 0.5, 100);
        CHECK(dump_document(to_json(a.graph)) != dump_document(to_json(c.graph)));
    }
}

TEST_CASE("gen_outerplanar") {
    SUBCASE("n=3 is the triangle") {
        Graph g = gen_outerplanar(3, 1);
        CHECK(g.edge_count() == 3);
    }
    SUBCASE("outerplanar graphs have stack number 1") {
        CHECK(exact_stack_number(gen_outerplanar(6, 7)).value == 1);
    }
    SUBCASE("small corpus: layered pathwidth at most 2") {
        for (uint64_t seed = 0; seed < 6; ++seed) {
            Graph g = gen_outerplanar(7, seed);
            CHECK(exact_layered_pathwidth(g).value <= 2);
        }
    }
    SUBCASE("generator outputs are maximal outerplanar: 2n-3 edges") {
        for (int n = 4; n <= 8; ++n)
            CHECK(gen_outerplanar(n, 3).edge_count() == 2 * n - 3);
    }
}
