#include "lpwkit/graph_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <unordered_map>

namespace lpwkit {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw MalformedInputError("graph: negative vertex count");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n) throw MalformedInputError("graph: vertex id out of range");
        if (e.u == e.v) throw MalformedInputError("graph: self-loop");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw MalformedInputError("graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(n), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string violation_code_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::EdgeUncovered: return "edge_uncovered";
        case ViolationCode::VertexIntervalBroken: return "vertex_interval_broken";
        case ViolationCode::VertexNotInAnyBag: return "vertex_not_in_any_bag";
        case ViolationCode::EdgeSpanExceeded: return "edge_span_exceeded";
        case ViolationCode::NotAPartition: return "not_a_partition";
        case ViolationCode::IntraTrackEdge: return "intra_track_edge";
        case ViolationCode::XCrossing: return "x_crossing";
        case ViolationCode::StackCrossing: return "stack_crossing";
        case ViolationCode::EdgeSpanNotOne: return "edge_span_not_one";
        case ViolationCode::DrawingCrossing: return "drawing_crossing";
        case ViolationCode::WidthMismatch: return "width_mismatch";
    }
    return "unknown";
}

namespace {

void check_bag_ids(const Graph& g, const PathDecomposition& d) {
    for (const auto& bag : d.bags)
        for (int v : bag)
            if (v < 0 || v >= g.vertex_count())
                throw MalformedInputError("path decomposition: vertex id out of range");
}

// First/last bag index per vertex plus an "appears in k bags" count; the
// interval is contiguous iff count == last - first + 1.
struct Intervals {
    std::vector<int> first, last, count;
};

Intervals bag_intervals(int n, const PathDecomposition& d) {
    Intervals iv;
    iv.first.assign(static_cast<size_t>(n), -1);
    iv.last.assign(static_cast<size_t>(n), -1);
    iv.count.assign(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < d.bags.size(); ++i) {
        std::set<int> seen;
        for (int v : d.bags[i]) {
            if (!seen.insert(v).second) continue;  // tolerate repeated ids inside one bag
            auto vi = static_cast<size_t>(v);
            if (iv.first[vi] < 0) iv.first[vi] = static_cast<int>(i);
            iv.last[vi] = static_cast<int>(i);
            iv.count[vi]++;
        }
    }
    return iv;
}

bool bag_contains(const std::vector<int>& bag, int v) {
    return std::find(bag.begin(), bag.end(), v) != bag.end();
}

}  // namespace

Verdict verify_path_decomposition(const Graph& g, const PathDecomposition& d) {
    std::vector<int> all(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    return verify_path_decomposition_on(g, all, d);
}

Verdict verify_path_decomposition_on(const Graph& g, const std::vector<int>& vertices,
                                     const PathDecomposition& d) {
    check_bag_ids(g, d);
    Verdict verdict;
    Intervals iv = bag_intervals(g.vertex_count(), d);
    std::vector<char> present(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : vertices) present[static_cast<size_t>(v)] = 1;

    for (int v : vertices) {
        auto vi = static_cast<size_t>(v);
        if (iv.count[vi] == 0) {
            verdict.violations.push_back({ViolationCode::VertexNotInAnyBag,
                                          "vertex " + std::to_string(v) + " appears in no bag",
                                          {v},
                                          {}});
        } else if (iv.count[vi] != iv.last[vi] - iv.first[vi] + 1) {
            verdict.violations.push_back({ViolationCode::VertexIntervalBroken,
                                          "vertex " + std::to_string(v) +
                                              " has a non-contiguous bag interval",
                                          {v},
                                          {}});
        }
    }
    for (const Edge& e : g.edges()) {
        if (!present[static_cast<size_t>(e.u)] || !present[static_cast<size_t>(e.v)]) continue;
        bool covered = false;
        // Contiguity makes overlap of the two intervals necessary and sufficient,
        // but scan directly so broken inputs still get a truthful answer.
        auto ui = static_cast<size_t>(e.u);
        if (iv.count[ui] > 0) {
            for (int i = iv.first[ui]; i <= iv.last[ui] && !covered; ++i)
                covered = bag_contains(d.bags[static_cast<size_t>(i)], e.u) &&
                          bag_contains(d.bags[static_cast<size_t>(i)], e.v);
        }
        if (!covered) {
            verdict.violations.push_back({ViolationCode::EdgeUncovered,
                                          "edge {" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + "} is in no bag",
                                          {},
                                          {e}});
        }
    }
    return verdict;
}

Verdict verify_layering(const Graph& g, const Layering& l) {
    std::vector<int> all(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    return verify_layering_on(g, all, l);
}

Verdict verify_layering_on(const Graph& g, const std::vector<int>& vertices, const Layering& l) {
    if (l.weakness < 1) throw MalformedInputError("layering: weakness must be >= 1");
    for (int v : vertices)
        if (v < 0 || static_cast<size_t>(v) >= l.levels.size())
            throw MalformedInputError("layering: missing level for vertex " + std::to_string(v));
    std::vector<char> present(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : vertices) present[static_cast<size_t>(v)] = 1;

    Verdict verdict;
    int worst = l.weakness;
    Edge worst_edge;
    for (const Edge& e : g.edges()) {
        if (!present[static_cast<size_t>(e.u)] || !present[static_cast<size_t>(e.v)]) continue;
        int span = std::abs(l.level(e.u) - l.level(e.v));
        if (span > worst) {
            worst = span;
            worst_edge = e;
        }
    }
    if (worst > l.weakness) {
        verdict.violations.push_back(
            {ViolationCode::EdgeSpanExceeded,
             "edge {" + std::to_string(worst_edge.u) + "," + std::to_string(worst_edge.v) +
                 "} spans " + std::to_string(worst) + " levels (weakness " +
                 std::to_string(l.weakness) + ")",
             {},
             {worst_edge}});
    }
    return verdict;
}

int layered_width(const PathDecomposition& d, const Layering& l) {
    int width = 0;
    std::unordered_map<int, int> counts;
    for (const auto& bag : d.bags) {
        counts.clear();
        for (int v : bag) {
            if (v < 0 || static_cast<size_t>(v) >= l.levels.size())
                throw MalformedInputError("layered_width: missing level for vertex " +
                                          std::to_string(v));
            width = std::max(width, ++counts[l.level(v)]);
        }
    }
    return width;
}

int layered_width_on(const std::vector<int>& vertices, const PathDecomposition& d,
                     const Layering& l) {
    std::set<int> keep(vertices.begin(), vertices.end());
    int width = 0;
    std::unordered_map<int, int> counts;
    for (const auto& bag : d.bags) {
        counts.clear();
        for (int v : bag)
            if (keep.count(v)) width = std::max(width, ++counts[l.level(v)]);
    }
    return width;
}

Verdict verify_track_layout(const Graph& g, const TrackLayout& t) {
    std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t ti = 0; ti < t.tracks.size(); ++ti) {
        for (int v : t.tracks[ti]) {
            if (v < 0 || v >= g.vertex_count())
                throw MalformedInputError("track layout: vertex id out of range");
            auto vi = static_cast<size_t>(v);
            if (owner[vi] >= 0)
                throw MalformedInputError("track layout: vertex " + std::to_string(v) +
                                          " appears in two tracks");
            owner[vi] = static_cast<int>(ti);
        }
    }

    Verdict verdict;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (owner[static_cast<size_t>(v)] < 0) {
            verdict.violations.push_back({ViolationCode::NotAPartition,
                                          "vertex " + std::to_string(v) + " is in no track",
                                          {v},
                                          {}});
        }
    }
    if (!verdict.ok()) return verdict;

    std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
    for (const auto& track : t.tracks)
        for (size_t i = 0; i < track.size(); ++i) pos[static_cast<size_t>(track[i])] = static_cast<int>(i);

    for (const Edge& e : g.edges()) {
        if (owner[static_cast<size_t>(e.u)] == owner[static_cast<size_t>(e.v)]) {
            verdict.violations.push_back({ViolationCode::IntraTrackEdge,
                                          "edge {" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + "} lies inside track " +
                                              std::to_string(owner[static_cast<size_t>(e.u)]),
                                          {},
                                          {e}});
        }
    }

    // X-crossing scan: pairs of edges between the same pair of tracks whose
    // endpoints appear in opposite relative orders.
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            int tu = owner[static_cast<size_t>(e.u)], tv = owner[static_cast<size_t>(e.v)];
            int tx = owner[static_cast<size_t>(f.u)], ty = owner[static_cast<size_t>(f.v)];
            if (tu == tv || tx == ty) continue;  // already reported
            int a = e.u, b = e.v, x = f.u, y = f.v;
            if (tu == ty && tv == tx) std::swap(x, y), std::swap(tx, ty);
            if (tu != tx || tv != ty) continue;  // different track pairs never X-cross
            if (a == x || b == y) continue;      // shared endpoint
            bool first = pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(x)];
            bool second = pos[static_cast<size_t>(b)] < pos[static_cast<size_t>(y)];
            if (first != second) {
                verdict.violations.push_back({ViolationCode::XCrossing,
                                              "edges {" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + "} and {" +
                                                  std::to_string(f.u) + "," + std::to_string(f.v) +
                                                  "} form an X-crossing",
                                              {},
                                              {e, f}});
            }
        }
    }
    return verdict;
}

std::vector<std::pair<Edge, Edge>> crossing_pairs(const std::vector<int>& order,
                                                  const std::vector<Edge>& edges) {
    std::vector<int> pos;
    size_t n = order.size();
    pos.assign(n, -1);
    for (size_t i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || static_cast<size_t>(v) >= n || pos[static_cast<size_t>(v)] >= 0)
            throw MalformedInputError("crossing_pairs: order is not a permutation");
        pos[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    auto at = [&](int v) {
        if (v < 0 || static_cast<size_t>(v) >= n)
            throw MalformedInputError("crossing_pairs: edge endpoint outside the order");
        return pos[static_cast<size_t>(v)];
    };
    std::vector<std::pair<Edge, Edge>> result;
    for (size_t i = 0; i < edges.size(); ++i) {
        int a = at(edges[i].u), b = at(edges[i].v);
        if (a > b) std::swap(a, b);
        for (size_t j = i + 1; j < edges.size(); ++j) {
            int c = at(edges[j].u), d = at(edges[j].v);
            if (c > d) std::swap(c, d);
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                result.emplace_back(edges[i], edges[j]);
        }
    }
    return result;
}

Verdict verify_stack_layout(const Graph& g, const StackLayout& s) {
    if (s.order.size() != static_cast<size_t>(g.vertex_count()))
        throw MalformedInputError("stack layout: order size mismatch");
    {
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : s.order) {
            if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)])
                throw MalformedInputError("stack layout: order is not a permutation");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    if (s.stack_of_edge.size() != static_cast<size_t>(g.edge_count()))
        throw MalformedInputError("stack layout: unassigned edge");
    for (int id : s.stack_of_edge)
        if (id < 0) throw MalformedInputError("stack layout: unassigned edge");

    // Group edges by stack, reuse the shared crossing predicate per stack.
    std::map<int, std::vector<Edge>> stacks;
    for (size_t i = 0; i < s.stack_of_edge.size(); ++i)
        stacks[s.stack_of_edge[i]].push_back(g.edges()[i]);

    Verdict verdict;
    for (const auto& [id, edges] : stacks) {
        for (const auto& [e, f] : crossing_pairs(s.order, edges)) {
            verdict.violations.push_back({ViolationCode::StackCrossing,
                                          "edges {" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + "} and {" +
                                              std::to_string(f.u) + "," + std::to_string(f.v) +
                                              "} cross in stack " + std::to_string(id),
                                          {},
                                          {e, f}});
        }
    }
    return verdict;
}

Verdict verify_layered_path_decomposition(const Graph& g, const LayeredPathDecomposition& lpd) {
    Verdict verdict = verify_path_decomposition(g, lpd.decomposition);
    Verdict lv = verify_layering(g, lpd.layering);
    verdict.violations.insert(verdict.violations.end(), lv.violations.begin(),
                              lv.violations.end());
    int w = layered_width(lpd.decomposition, lpd.layering);
    if (w != lpd.layered_width) {
        verdict.violations.push_back({ViolationCode::WidthMismatch,
                                      "declared layered width " +
                                          std::to_string(lpd.layered_width) +
                                          " but recomputed " + std::to_string(w),
                                      {},
                                      {}});
    }
    return verdict;
}

Verdict verify_levelled_drawing(const LevelledDrawing& d) {
    Verdict verdict;
    std::vector<char> present(static_cast<size_t>(d.graph.vertex_count()), 0);
    for (int v : d.vertices) present[static_cast<size_t>(v)] = 1;

    std::vector<int> pos(static_cast<size_t>(d.graph.vertex_count()), -1);
    for (const auto& [level, row] : d.rows) {
        (void)level;
        for (size_t i = 0; i < row.size(); ++i) pos[static_cast<size_t>(row[i])] = static_cast<int>(i);
    }

    for (const Edge& e : d.graph.edges()) {
        if (!present[static_cast<size_t>(e.u)] || !present[static_cast<size_t>(e.v)]) continue;
        if (std::abs(d.level_of[static_cast<size_t>(e.u)] -
                     d.level_of[static_cast<size_t>(e.v)]) != 1) {
            verdict.violations.push_back({ViolationCode::EdgeSpanNotOne,
                                          "edge {" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) +
                                              "} does not join consecutive levels",
                                          {},
                                          {e}});
        }
    }
    const auto& edges = d.graph.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            Edge e = edges[i], f = edges[j];
            // orient both edges lower level -> upper level
            auto lvl = [&](int v) { return d.level_of[static_cast<size_t>(v)]; };
            int a = e.u, b = e.v, c = f.u, x = f.v;
            if (lvl(a) > lvl(b)) std::swap(a, b);
            if (lvl(c) > lvl(x)) std::swap(c, x);
            if (lvl(a) != lvl(c) || lvl(b) != lvl(x)) continue;
            if (a == c || b == x) continue;
            bool lower = pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(c)];
            bool upper = pos[static_cast<size_t>(b)] < pos[static_cast<size_t>(x)];
            if (lower != upper) {
                verdict.violations.push_back({ViolationCode::DrawingCrossing,
                                              "edges {" + std::to_string(e.u) + "," +
                                                  std::to_string(e.v) + "} and {" +
                                                  std::to_string(f.u) + "," + std::to_string(f.v) +
                                                  "} cross in the levelled drawing",
                                              {},
                                              {e, f}});
            }
        }
    }
    return verdict;
}

LayeredPathDecomposition collapse_layering(const Graph& g, const Layering& l,
                                           const PathDecomposition& d) {
    Verdict dv = verify_path_decomposition(g, d);
    Verdict lv = verify_layering(g, l);
    if (!dv.ok() || !lv.ok())
        throw PreconditionError("collapse_layering: input is not a valid layered path decomposition");

    const int s = l.weakness;
    Layering collapsed;
    collapsed.weakness = 1;
    collapsed.levels.reserve(l.levels.size());
    for (int lev : l.levels) {
        // floor division toward -infinity
        int q = lev >= 0 ? lev / s : -((-lev + s - 1) / s);
        collapsed.levels.push_back(q);
    }
    LayeredPathDecomposition out;
    out.decomposition = d;
    out.layering = collapsed;
    out.layered_width = layered_width(d, collapsed);
    return out;
}

}  // namespace lpwkit
