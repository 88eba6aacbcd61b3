#include <doctest.h>

#include "lpwkit/generators.hpp"
#include "lpwkit/oracles.hpp"
#include "test_util.hpp"

using namespace lpwkit;
using namespace lpwkit::testutil;

TEST_CASE("exact_stack_number") {
    SUBCASE("K3 fits in one stack") {
        StackNumberResult r = exact_stack_number(complete_graph(3));
        CHECK(r.value == 1);
        CHECK(verify_stack_layout(complete_graph(3), r.witness).ok());
    }
    SUBCASE("K4 needs two stacks") {
        StackNumberResult r = exact_stack_number(complete_graph(4));
        CHECK(r.value == 2);
        CHECK(verify_stack_layout(complete_graph(4), r.witness).ok());
    }
    SUBCASE("paths and edgeless graphs") {
        CHECK(exact_stack_number(path_graph(6)).value == 1);
        CHECK(exact_stack_number(Graph(4, {})).value == 0);
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(exact_stack_number(path_graph(9)), BudgetExceededError);
        OracleBudget b;
        b.max_vertices = 9;
        CHECK(exact_stack_number(path_graph(9), b).value == 1);
    }
}

TEST_CASE("exact_layered_pathwidth") {
    SUBCASE("paths have layered pathwidth 1") {
        for (int n = 2; n <= 7; ++n) {
            LayeredPathwidthResult r = exact_layered_pathwidth(path_graph(n));
            CHECK(r.value == 1);
            CHECK(verify_layered_path_decomposition(path_graph(n), r.witness).ok());
        }
    }
    SUBCASE("K4 has layered pathwidth 2") {
        LayeredPathwidthResult r = exact_layered_pathwidth(complete_graph(4));
        CHECK(r.value == 2);
        CHECK(verify_layered_path_decomposition(complete_graph(4), r.witness).ok());
    }
    SUBCASE("3x3 grid with diagonals has layered pathwidth 2") {
        GridResult grid = gen_grid(3, true);
        OracleBudget b;
        b.max_vertices = 9;
        LayeredPathwidthResult r = exact_layered_pathwidth(grid.graph, b);
        CHECK(r.value == 2);
        CHECK(verify_layered_path_decomposition(grid.graph, r.witness).ok());
    }
    SUBCASE("disconnected graphs take the maximum over components") {
        Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 5}});
        LayeredPathwidthResult r = exact_layered_pathwidth(g);
        CHECK(r.value == exact_layered_pathwidth(complete_graph(3)).value);
        CHECK(verify_layered_path_decomposition(g, r.witness).ok());
    }
}

TEST_CASE("exact_weak_layered_pathwidth") {
    SUBCASE("single edge") {
        CHECK(exact_weak_layered_pathwidth(Graph(2, {{0, 1}}), 2).value == 1);
    }
    SUBCASE("K4 under weakness 2 and 3") {
        // Any 2-weak layering of K4 squeezes its vertices into a window of 3
        // levels, so some level holds an edge and every decomposition has a
        // bag meeting that level twice.  Weakness 3 allows 4 distinct levels.
        CHECK(exact_weak_layered_pathwidth(complete_graph(4), 2).value == 2);
        CHECK(exact_weak_layered_pathwidth(complete_graph(4), 3).value == 1);
    }
    SUBCASE("lemma-3 cross-check: lpw <= s * lpw_s on random graphs") {
        Rng rng(5);
        for (int round = 0; round < 20; ++round) {
            Graph g = random_graph(6, 0.5, rng);
            int lpw = exact_layered_pathwidth(g).value;
            for (int s = 2; s <= 3; ++s)
                CHECK(lpw <= s * exact_weak_layered_pathwidth(g, s).value);
        }
    }
}

TEST_CASE("has_3track_layout") {
    SUBCASE("triangle has a witness") {
        auto w = has_3track_layout(complete_graph(3));
        REQUIRE(w.has_value());
        CHECK(verify_track_layout(complete_graph(3), *w).ok());
    }
    SUBCASE("K5 has none") {
        CHECK_FALSE(has_3track_layout(complete_graph(5)).has_value());
    }
    SUBCASE("caterpillars up to 8 vertices have witnesses") {
        for (auto [spine, legs] : {std::pair{3, 1}, {4, 1}, {2, 2}, {7, 0}}) {
            CaterpillarResult c = gen_caterpillar(spine, legs);
            REQUIRE(c.graph.vertex_count() <= 8);
            auto w = has_3track_layout(c.graph);
            REQUIRE(w.has_value());
            CHECK(verify_track_layout(c.graph, *w).ok());
        }
    }
}

TEST_CASE("oracle invariants") {
    SUBCASE("edge removal never increases sn or lpw") {
        Rng rng(123);
        for (int round = 0; round < 10; ++round) {
            Graph g = random_graph(5, 0.6, rng);
            if (g.edge_count() == 0) continue;
            int sn = exact_stack_number(g).value;
            int lpw = exact_layered_pathwidth(g).value;
            std::vector<Edge> edges = g.edges();
            edges.erase(edges.begin() + static_cast<long>(rng.below(edges.size())));
            Graph h(5, edges);
            CHECK(exact_stack_number(h).value <= sn);
            CHECK(exact_layered_pathwidth(h).value <= lpw);
        }
    }
    SUBCASE("sandwich: sn <= 4 lpw and 3-track implies lpw <= 4 on small graphs") {
        Rng rng(321);
        for (int round = 0; round < 15; ++round) {
            Graph g = random_graph(5, 0.5, rng);
            CHECK(exact_stack_number(g).value <= 4 * std::max(1, exact_layered_pathwidth(g).value));
            auto w = has_3track_layout(g);
            if (w.has_value()) CHECK(exact_layered_pathwidth(g).value <= 4);
        }
    }
}
