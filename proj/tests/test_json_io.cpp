#include <doctest.h>

#include "lpwkit/json_io.hpp"
#include "test_util.hpp"

using namespace lpwkit;
using namespace lpwkit::testutil;

TEST_CASE("round-trip: serialized objects re-read identically") {
    Rng rng(99);
    for (int round = 0; round < 20; ++round) {
        int n = 1 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, 0.5, rng);
        CHECK(graph_from_json(parse_document(dump_document(to_json(g)))) == g);

        Layering l = random_layering(g, 1 + static_cast<int>(rng.below(3)), rng);
        Layering l2 = layering_from_json(parse_document(dump_document(to_json(l))));
        CHECK(l2.levels == l.levels);
        CHECK(l2.weakness == l.weakness);

        PathDecomposition d = random_decomposition(g, rng);
        CHECK(path_decomposition_from_json(parse_document(dump_document(to_json(d)))).bags ==
              d.bags);
    }
}

TEST_CASE("stack layout and track layout documents") {
    Graph g = complete_graph(3);
    StackLayout s{{2, 0, 1}, {0, 0, 0}, 1};
    StackLayout s2 = stack_layout_from_json(parse_document(dump_document(to_json(s))));
    CHECK(s2.order == s.order);
    CHECK(s2.stack_of_edge == s.stack_of_edge);
    CHECK(s2.stack_count == 1);

    TrackLayout t{{{0}, {1}, {2}}};
    CHECK(track_layout_from_json(parse_document(dump_document(to_json(t)))).tracks == t.tracks);
    CHECK(verify_track_layout(g, t).ok());
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_document("{"), MalformedInputError);
    CHECK_THROWS_AS(parse_document("{\"kind\":\"graph\"}"), MalformedInputError);
    CHECK_THROWS_AS(parse_document("{\"format_version\":99,\"kind\":\"graph\"}"),
                    MalformedInputError);
    auto doc = parse_document("{\"format_version\":1,\"kind\":\"graph\",\"n\":2,\"edges\":[[0,1]]}");
    CHECK_THROWS_AS(layering_from_json(doc), MalformedInputError);
    CHECK(graph_from_json(extract_kind(doc, "graph")).edge_count() == 1);
    CHECK_THROWS_AS(extract_kind(doc, "layering"), MalformedInputError);
}
