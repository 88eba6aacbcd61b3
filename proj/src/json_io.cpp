#include "lpwkit/json_io.hpp"

namespace lpwkit {

using nlohmann::json;

namespace {

json base(const char* kind) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = kind;
    return doc;
}

void expect_kind(const json& doc, const std::string& kind) {
    if (!doc.is_object() || !doc.contains("kind") || doc["kind"] != kind)
        throw MalformedInputError("expected a \"" + kind + "\" document");
}

int get_int(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_number_integer())
        throw MalformedInputError(std::string("missing integer field \"") + field + "\"");
    return doc[field].get<int>();
}

std::vector<int> get_int_array(const json& value, const char* what) {
    if (!value.is_array()) throw MalformedInputError(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_number_integer())
            throw MalformedInputError(std::string(what) + " must contain integers");
        out.push_back(item.get<int>());
    }
    return out;
}

}  // namespace

json to_json(const Graph& g) {
    json doc = base("graph");
    doc["n"] = g.vertex_count();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = edges;
    return doc;
}

Graph graph_from_json(const json& doc) {
    expect_kind(doc, "graph");
    int n = get_int(doc, "n");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw MalformedInputError("graph: missing edges array");
    std::vector<Edge> edges;
    for (const auto& pair : doc["edges"]) {
        std::vector<int> uv = get_int_array(pair, "graph edge");
        if (uv.size() != 2) throw MalformedInputError("graph: edge must be a [u,v] pair");
        edges.emplace_back(uv[0], uv[1]);
    }
    return Graph(n, std::move(edges));
}

json to_json(const Layering& l) {
    json doc = base("layering");
    doc["s"] = l.weakness;
    doc["levels"] = l.levels;
    return doc;
}

Layering layering_from_json(const json& doc) {
    expect_kind(doc, "layering");
    Layering l;
    l.weakness = get_int(doc, "s");
    if (l.weakness < 1) throw MalformedInputError("layering: s must be >= 1");
    if (!doc.contains("levels")) throw MalformedInputError("layering: missing levels");
    l.levels = get_int_array(doc["levels"], "layering levels");
    return l;
}

json to_json(const PathDecomposition& d) {
    json doc = base("path_decomposition");
    doc["bags"] = d.bags;
    return doc;
}

PathDecomposition path_decomposition_from_json(const json& doc) {
    expect_kind(doc, "path_decomposition");
    if (!doc.contains("bags") || !doc["bags"].is_array())
        throw MalformedInputError("path_decomposition: missing bags");
    PathDecomposition d;
    for (const auto& bag : doc["bags"]) d.bags.push_back(get_int_array(bag, "bag"));
    return d;
}

json to_json(const LayeredPathDecomposition& lpd) {
    json doc = base("layered_path_decomposition");
    doc["bags"] = lpd.decomposition.bags;
    doc["s"] = lpd.layering.weakness;
    doc["levels"] = lpd.layering.levels;
    doc["layered_width"] = lpd.layered_width;
    return doc;
}

LayeredPathDecomposition layered_path_decomposition_from_json(const json& doc) {
    expect_kind(doc, "layered_path_decomposition");
    LayeredPathDecomposition lpd;
    if (!doc.contains("bags") || !doc["bags"].is_array())
        throw MalformedInputError("layered_path_decomposition: missing bags");
    for (const auto& bag : doc["bags"]) lpd.decomposition.bags.push_back(get_int_array(bag, "bag"));
    lpd.layering.weakness = get_int(doc, "s");
    if (!doc.contains("levels"))
        throw MalformedInputError("layered_path_decomposition: missing levels");
    lpd.layering.levels = get_int_array(doc["levels"], "levels");
    lpd.layered_width = get_int(doc, "layered_width");
    return lpd;
}

json to_json(const TrackLayout& t) {
    json doc = base("track_layout");
    doc["tracks"] = t.tracks;
    return doc;
}

TrackLayout track_layout_from_json(const json& doc) {
    expect_kind(doc, "track_layout");
    if (!doc.contains("tracks") || !doc["tracks"].is_array())
        throw MalformedInputError("track_layout: missing tracks");
    TrackLayout t;
    for (const auto& track : doc["tracks"]) t.tracks.push_back(get_int_array(track, "track"));
    return t;
}

json to_json(const StackLayout& s) {
    json doc = base("stack_layout");
    doc["order"] = s.order;
    doc["stacks"] = s.stack_of_edge;
    doc["stack_count"] = s.stack_count;
    return doc;
}

StackLayout stack_layout_from_json(const json& doc) {
    expect_kind(doc, "stack_layout");
    StackLayout s;
    if (!doc.contains("order")) throw MalformedInputError("stack_layout: missing order");
    s.order = get_int_array(doc["order"], "order");
    if (!doc.contains("stacks")) throw MalformedInputError("stack_layout: missing stacks");
    s.stack_of_edge = get_int_array(doc["stacks"], "stacks");
    s.stack_count = get_int(doc, "stack_count");
    return s;
}

json to_json(const Verdict& v) {
    json doc = base("verdict");
    doc["ok"] = v.ok();
    json violations = json::array();
    for (const Violation& violation : v.violations) {
        json item;
        item["code"] = violation_code_name(violation.code);
        item["message"] = violation.message;
        item["vertices"] = violation.vertices;
        json edges = json::array();
        for (const Edge& e : violation.edges) edges.push_back({e.u, e.v});
        item["edges"] = edges;
        violations.push_back(item);
    }
    doc["violations"] = violations;
    return doc;
}

json parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw MalformedInputError(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("format_version"))
        throw MalformedInputError("document has no format_version");
    if (doc["format_version"] != kFormatVersion)
        throw MalformedInputError("unsupported format_version");
    return doc;
}

json extract_kind(const json& doc, const std::string& kind) {
    if (doc.is_object() && doc.contains("kind")) {
        if (doc["kind"] == kind) return doc;
        if (doc["kind"] == "bundle" && doc.contains("objects")) {
            for (const auto& obj : doc["objects"])
                if (obj.is_object() && obj.contains("kind") && obj["kind"] == kind) return obj;
        }
    }
    throw MalformedInputError("no \"" + kind + "\" document found");
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace lpwkit
