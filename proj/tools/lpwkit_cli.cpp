// Command-line surface for the layout/decomposition pipeline: generate,
// saturate, construct, verify, query oracles, export.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 budget exceeded, 4 internal assertion.  Machine-parseable documents go
// to stdout, diagnostics to stderr.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpwkit/generators.hpp"
#include "lpwkit/json_io.hpp"
#include "lpwkit/oracles.hpp"
#include "lpwkit/stack_constructor.hpp"
#include "lpwkit/track_decomposer.hpp"

using namespace lpwkit;
using nlohmann::json;

namespace {

json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void emit(const json& doc) { std::cout << dump_document(doc); }

json bundle(std::initializer_list<json> objects) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "bundle";
    doc["objects"] = json::array();
    for (const json& obj : objects) doc["objects"].push_back(obj);
    return doc;
}

PathDecomposition decomposition_from_doc(const json& doc) {
    try {
        return path_decomposition_from_json(extract_kind(doc, "path_decomposition"));
    } catch (const MalformedInputError&) {
    }
    return layered_path_decomposition_from_json(extract_kind(doc, "layered_path_decomposition"))
        .decomposition;
}

Layering layering_from_doc(const json& doc) {
    try {
        return layering_from_json(extract_kind(doc, "layering"));
    } catch (const MalformedInputError&) {
    }
    return layered_path_decomposition_from_json(extract_kind(doc, "layered_path_decomposition"))
        .layering;
}

int run_verify(const std::string& kind, const std::vector<std::string>& files) {
    auto need = [&](size_t count) {
        if (files.size() != count)
            throw MalformedInputError("verify " + kind + ": expected " + std::to_string(count) +
                                      " file(s)");
    };
    Verdict verdict;
    if (kind == "graph") {
        need(1);
        graph_from_json(extract_kind(read_document(files[0]), "graph"));
    } else if (kind == "layering") {
        need(2);
        Graph g = graph_from_json(extract_kind(read_document(files[0]), "graph"));
        verdict = verify_layering(g, layering_from_doc(read_document(files[1])));
    } else if (kind == "path_decomposition") {
        need(2);
        Graph g = graph_from_json(extract_kind(read_document(files[0]), "graph"));
        verdict = verify_path_decomposition(g, decomposition_from_doc(read_document(files[1])));
    } else if (kind == "track_layout") {
        need(2);
        Graph g = graph_from_json(extract_kind(read_document(files[0]), "graph"));
        verdict = verify_track_layout(
            g, track_layout_from_json(extract_kind(read_document(files[1]), "track_layout")));
    } else if (kind == "stack_layout") {
        need(2);
        Graph g = graph_from_json(extract_kind(read_document(files[0]), "graph"));
        verdict = verify_stack_layout(
            g, stack_layout_from_json(extract_kind(read_document(files[1]), "stack_layout")));
    } else if (kind == "layered_path_decomposition") {
        need(2);
        Graph g = graph_from_json(extract_kind(read_document(files[0]), "graph"));
        verdict = verify_layered_path_decomposition(
            g, layered_path_decomposition_from_json(
                   extract_kind(read_document(files[1]), "layered_path_decomposition")));
    } else {
        throw MalformedInputError("verify: unknown kind \"" + kind + "\"");
    }
    emit(to_json(verdict));
    if (!verdict.ok()) {
        for (const Violation& v : verdict.violations)
            std::cerr << violation_code_name(v.code) << ": " << v.message << "\n";
        return 1;
    }
    return 0;
}

void export_graph_dot(const Graph& g, std::ostream& out) {
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

void export_track_layout_dot(const Graph* g, const TrackLayout& t, std::ostream& out) {
    out << "graph G {\n  node [shape=circle];\n";
    // three-ray embedding: track i along a ray at 90, 210, 330 degrees
    const double angles[3] = {M_PI / 2, M_PI * 7 / 6, M_PI * 11 / 6};
    for (size_t ti = 0; ti < t.tracks.size(); ++ti) {
        double angle = angles[ti % 3];
        for (size_t i = 0; i < t.tracks[ti].size(); ++i) {
            double r = static_cast<double>(i + 1);
            out << "  " << t.tracks[ti][i] << " [pos=\"" << std::cos(angle) * r << ","
                << std::sin(angle) * r << "!\"];\n";
        }
    }
    if (g)
        for (const Edge& e : g->edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

void export_stack_layout_dot(const Graph* g, const StackLayout& s, std::ostream& out) {
    out << "graph G {\n  node [shape=point];\n";
    for (size_t i = 0; i < s.order.size(); ++i)
        out << "  " << s.order[i] << " [pos=\"" << i << ",0!\"];\n";
    if (g)
        for (int i = 0; i < g->edge_count(); ++i)
            out << "  " << g->edges()[static_cast<size_t>(i)].u << " -- "
                << g->edges()[static_cast<size_t>(i)].v << " [label=\""
                << s.stack_of_edge[static_cast<size_t>(i)] << "\"];\n";
    out << "}\n";
}

struct Options {
    std::string family;
    std::vector<int> params;
    uint64_t seed = 0;
    bool diagonals = false;
    bool connected = false;
    double density = 1.0;

    std::string graph_file, tracks_file, decomposition_file, layering_file;
    std::string trace_path, object_file, companion_graph;
    std::string kind, query;
    std::vector<std::string> files;
    int weakness = 2;
    int budget_n = 8;
    double budget_time = 60.0;
};

int dispatch(const CLI::App& app, const Options& opt) {
    if (app.got_subcommand("gen")) {
        auto want = [&](size_t count) {
            if (opt.params.size() != count)
                throw MalformedInputError("gen " + opt.family + ": expected " +
                                          std::to_string(count) + " integer parameter(s)");
        };
        if (opt.family == "grid") {
            want(1);
            GridResult r = gen_grid(opt.params[0], opt.diagonals);
            emit(bundle({to_json(r.graph), to_json(r.decomposition)}));
        } else if (opt.family == "caterpillar") {
            want(2);
            CaterpillarResult r = gen_caterpillar(opt.params[0], opt.params[1]);
            emit(bundle({to_json(r.graph), to_json(r.layout)}));
        } else if (opt.family == "tree-plus-apex") {
            want(1);
            emit(bundle({to_json(gen_tree_plus_apex(opt.params[0]))}));
        } else if (opt.family == "random-3track") {
            want(3);
            Random3TrackResult r = gen_random_3track(opt.params[0], opt.params[1], opt.params[2],
                                                     opt.density, opt.seed, opt.connected);
            emit(bundle({to_json(r.graph), to_json(r.layout)}));
        } else if (opt.family == "outerplanar") {
            want(1);
            emit(bundle({to_json(gen_outerplanar(opt.params[0], opt.seed))}));
        } else {
            throw MalformedInputError("gen: unknown family \"" + opt.family + "\"");
        }
        return 0;
    }

    if (app.got_subcommand("saturate")) {
        Graph g = graph_from_json(extract_kind(read_document(opt.graph_file), "graph"));
        TrackLayout t =
            track_layout_from_json(extract_kind(read_document(opt.tracks_file), "track_layout"));
        SaturatedTrackLayout s = saturate(g, t);
        json doc = bundle({to_json(s.graph), to_json(s.layout)});
        json added = json::array();
        for (const Edge& e : s.added_edges) added.push_back({e.u, e.v});
        doc["added_edges"] = added;
        emit(doc);
        return 0;
    }

    if (app.got_subcommand("spiral")) {
        Graph g = graph_from_json(extract_kind(read_document(opt.graph_file), "graph"));
        TrackLayout t =
            track_layout_from_json(extract_kind(read_document(opt.tracks_file), "track_layout"));
        SaturatedTrackLayout s = saturate(g, t);
        auto result = build_spiral(s);
        json doc;
        doc["format_version"] = kFormatVersion;
        if (std::holds_alternative<SpiralPath>(result)) {
            const SpiralPath& p = std::get<SpiralPath>(result);
            doc["kind"] = "spiral_path";
            doc["vertices"] = p.vertices;
            doc["rotation"] = std::vector<int>(p.track_rotation.begin(), p.track_rotation.end());
        } else {
            const CutTriangle& c = std::get<CutTriangle>(result);
            doc["kind"] = "cut_triangle";
            doc["vertices"] = std::vector<int>(c.vertices.begin(), c.vertices.end());
        }
        emit(doc);
        return 0;
    }

    if (app.got_subcommand("lpd-from-tracks")) {
        Graph g = graph_from_json(extract_kind(read_document(opt.graph_file), "graph"));
        TrackLayout t =
            track_layout_from_json(extract_kind(read_document(opt.tracks_file), "track_layout"));
        TrackPipelineResult result = decompose_3track_full(g, t, !opt.trace_path.empty());
        Verdict check = verify_layered_path_decomposition(g, result.decomposition);
        if (!check.ok())
            throw InternalAssertionError("output failed re-verification",
                                         dump_document(to_json(g)));
        if (!opt.trace_path.empty()) {
            json trace_doc;
            trace_doc["format_version"] = kFormatVersion;
            trace_doc["kind"] = "trace";
            trace_doc["stages"] = result.trace;
            std::ofstream out(opt.trace_path);
            out << dump_document(trace_doc);
        }
        emit(to_json(result.decomposition));
        return 0;
    }

    if (app.got_subcommand("stack-layout")) {
        Graph g = graph_from_json(extract_kind(read_document(opt.graph_file), "graph"));
        PathDecomposition d = decomposition_from_doc(read_document(opt.decomposition_file));
        Layering l = layering_from_doc(read_document(opt.layering_file));
        Verdict dv = verify_path_decomposition(g, d);
        Verdict lv = verify_layering(g, l);
        if (!dv.ok() || !lv.ok()) {
            const Violation& v = dv.ok() ? lv.violations.front() : dv.violations.front();
            throw PreconditionError("stack-layout: invalid input: " + v.message);
        }
        int k = layered_width(d, l);
        StackLayout s = build_stack_layout(g, d, l);
        Verdict check = verify_stack_layout(g, s);
        if (!check.ok())
            throw InternalAssertionError("output failed re-verification",
                                         dump_document(to_json(g)));
        json doc = to_json(s);
        doc["summary"] = {{"layered_width", k},
                          {"stacks_used", s.stack_count},
                          {"stack_bound", 4 * k}};
        emit(doc);
        return 0;
    }

    if (app.got_subcommand("collapse")) {
        Graph g = graph_from_json(extract_kind(read_document(opt.graph_file), "graph"));
        Layering l = layering_from_doc(read_document(opt.layering_file));
        PathDecomposition d = decomposition_from_doc(read_document(opt.decomposition_file));
        emit(to_json(collapse_layering(g, l, d)));
        return 0;
    }

    if (app.got_subcommand("verify")) return run_verify(opt.kind, opt.files);

    if (app.got_subcommand("oracle")) {
        Graph g = graph_from_json(extract_kind(read_document(opt.graph_file), "graph"));
        OracleBudget budget;
        budget.max_vertices = opt.budget_n;
        budget.time_limit_s = opt.budget_time;
        json doc;
        doc["format_version"] = kFormatVersion;
        doc["kind"] = "oracle_result";
        doc["query"] = opt.query;
        if (opt.query == "stack-number") {
            StackNumberResult r = exact_stack_number(g, budget);
            doc["value"] = r.value;
            doc["witness"] = to_json(r.witness);
        } else if (opt.query == "lpw") {
            LayeredPathwidthResult r = exact_layered_pathwidth(g, budget);
            doc["value"] = r.value;
            doc["witness"] = to_json(r.witness);
        } else if (opt.query == "weak-lpw") {
            LayeredPathwidthResult r = exact_weak_layered_pathwidth(g, opt.weakness, budget);
            doc["value"] = r.value;
            doc["witness"] = to_json(r.witness);
        } else if (opt.query == "has-3track") {
            auto witness = has_3track_layout(g, budget);
            doc["value"] = witness.has_value();
            doc["witness"] = witness.has_value() ? to_json(*witness) : json(nullptr);
        } else {
            throw MalformedInputError("oracle: unknown query \"" + opt.query + "\"");
        }
        emit(doc);
        return 0;
    }

    if (app.got_subcommand("export-dot")) {
        json doc = read_document(opt.object_file);
        Graph companion;
        bool have_graph = false;
        if (!opt.companion_graph.empty()) {
            companion = graph_from_json(extract_kind(read_document(opt.companion_graph), "graph"));
            have_graph = true;
        } else {
            try {
                companion = graph_from_json(extract_kind(doc, "graph"));
                have_graph = true;
            } catch (const MalformedInputError&) {
            }
        }
        auto has = [&](const char* kind) {
            try {
                extract_kind(doc, kind);
                return true;
            } catch (const MalformedInputError&) {
                return false;
            }
        };
        if (has("track_layout")) {
            TrackLayout t = track_layout_from_json(extract_kind(doc, "track_layout"));
            export_track_layout_dot(have_graph ? &companion : nullptr, t, std::cout);
        } else if (has("stack_layout")) {
            StackLayout s = stack_layout_from_json(extract_kind(doc, "stack_layout"));
            export_stack_layout_dot(have_graph ? &companion : nullptr, s, std::cout);
        } else if (have_graph) {
            export_graph_dot(companion, std::cout);
        } else {
            throw MalformedInputError("export-dot: no renderable object in the document");
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"layered path decompositions, stack layouts, and 3-track layouts"};
    app.require_subcommand(1);
    Options opt;
    int format_version = kFormatVersion;
    app.add_option("--format-version", format_version, "interchange format version (1)");

    auto* gen = app.add_subcommand("gen", "generate example families");
    gen->add_option("family", opt.family,
                    "grid | caterpillar | tree-plus-apex | random-3track | outerplanar")
        ->required();
    gen->add_option("params", opt.params, "family parameters");
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_flag("--diagonals", opt.diagonals, "grid: add one diagonal per cell");
    gen->add_flag("--connected", opt.connected, "random-3track: keep a spanning connected subgraph");
    gen->add_option("--density", opt.density, "random-3track: edge keep probability");

    auto* sat = app.add_subcommand("saturate", "saturate a 3-track layout to its fixpoint");
    sat->add_option("graph", opt.graph_file)->required();
    sat->add_option("tracks", opt.tracks_file)->required();

    auto* spiral = app.add_subcommand("spiral", "greedy spiral walk of a saturated layout");
    spiral->add_option("graph", opt.graph_file)->required();
    spiral->add_option("tracks", opt.tracks_file)->required();

    auto* lpd = app.add_subcommand(
        "lpd-from-tracks", "layered path decomposition (width <= 4) from a 3-track layout");
    lpd->add_option("graph", opt.graph_file)->required();
    lpd->add_option("tracks", opt.tracks_file)->required();
    lpd->add_option("--trace", opt.trace_path, "write the pipeline stage trace to this file");

    auto* stack = app.add_subcommand("stack-layout",
                                     "stack layout (<= 4k stacks) from a width-k decomposition");
    stack->add_option("graph", opt.graph_file)->required();
    stack->add_option("decomposition", opt.decomposition_file)->required();
    stack->add_option("layering", opt.layering_file)->required();

    auto* collapse =
        app.add_subcommand("collapse", "collapse an s-weak layering to an ordinary one");
    collapse->add_option("graph", opt.graph_file)->required();
    collapse->add_option("layering", opt.layering_file)->required();
    collapse->add_option("decomposition", opt.decomposition_file)->required();

    auto* verify = app.add_subcommand("verify", "verify an object against a graph");
    verify->add_option("kind", opt.kind,
                       "graph | layering | path_decomposition | track_layout | stack_layout | "
                       "layered_path_decomposition")
        ->required();
    verify->add_option("files", opt.files, "graph document, then the object document");

    auto* oracle = app.add_subcommand("oracle", "exact small-instance queries");
    oracle->add_option("query", opt.query, "stack-number | lpw | weak-lpw | has-3track")
        ->required();
    oracle->add_option("graph", opt.graph_file)->required();
    oracle->add_option("--s", opt.weakness, "weakness for weak-lpw");
    oracle->add_option("--budget-n", opt.budget_n, "max vertices");
    oracle->add_option("--budget-time", opt.budget_time, "time limit in seconds");

    auto* dot = app.add_subcommand("export-dot", "render an object as DOT with coordinates");
    dot->add_option("object", opt.object_file)->required();
    dot->add_option("--graph", opt.companion_graph, "companion graph document");

    CLI11_PARSE(app, argc, argv);

    if (format_version != kFormatVersion) {
        std::cerr << "unsupported format version\n";
        return 2;
    }

    try {
        return dispatch(app, opt);
    } catch (const BudgetExceededError& err) {
        std::cerr << "budget exceeded: " << err.what() << "\n";
        return 3;
    } catch (const InternalAssertionError& err) {
        std::cerr << "internal assertion: " << err.what() << "\n";
        std::cerr << err.instance_json() << "\n";
        return 4;
    } catch (const InputError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
