#include "lpwkit/track_decomposer.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <unordered_set>

#include "lpwkit/json_io.hpp"

namespace lpwkit {

namespace {

using nlohmann::json;

struct VertexMap {
    std::vector<int> track_of;  // -1 when not in the layout
    std::vector<int> pos_of;

    VertexMap(int n, const TrackLayout& t) : track_of(static_cast<size_t>(n), -1),
                                             pos_of(static_cast<size_t>(n), -1) {
        for (size_t ti = 0; ti < t.tracks.size(); ++ti)
            for (size_t i = 0; i < t.tracks[ti].size(); ++i) {
                track_of[static_cast<size_t>(t.tracks[ti][i])] = static_cast<int>(ti);
                pos_of[static_cast<size_t>(t.tracks[ti][i])] = static_cast<int>(i);
            }
    }

    int track(int v) const { return track_of[static_cast<size_t>(v)]; }
    int pos(int v) const { return pos_of[static_cast<size_t>(v)]; }
};

std::vector<int> layout_vertices(const TrackLayout& t) {
    std::vector<int> out;
    for (const auto& track : t.tracks) out.insert(out.end(), track.begin(), track.end());
    return out;
}

json instance_dump(const Graph& g, const TrackLayout& t, const char* where) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "bundle";
    doc["note"] = where;
    doc["objects"] = json::array({to_json(g), to_json(t)});
    return doc;
}

[[noreturn]] void pipeline_assert_fail(const Graph& g, const TrackLayout& t, const std::string& msg) {
    throw InternalAssertionError("track-decomposer: " + msg,
                                 dump_document(instance_dump(g, t, msg.c_str())));
}

// Saturation without the full-partition precondition; used by the recursion,
// whose induced subgraphs leave the other vertices isolated.
SaturatedTrackLayout saturate_restricted(const Graph& g, const TrackLayout& t) {
    if (t.track_count() != 3)
        throw MalformedInputError("saturate: expected exactly 3 tracks");
    VertexMap vm(g.vertex_count(), t);
    for (const Edge& e : g.edges())
        if (vm.track(e.u) < 0 || vm.track(e.v) < 0)
            pipeline_assert_fail(g, t, "edge endpoint outside the layout");

    // Presence matrix per track pair, indexed by positions.
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    std::array<std::vector<std::vector<char>>, 3> present;
    for (int pi = 0; pi < 3; ++pi) {
        auto [a, b] = pairs[static_cast<size_t>(pi)];
        present[static_cast<size_t>(pi)].assign(
            t.tracks[static_cast<size_t>(a)].size(),
            std::vector<char>(t.tracks[static_cast<size_t>(b)].size(), 0));
    }
    auto pair_index = [&](int ta, int tb) {
        for (int pi = 0; pi < 3; ++pi)
            if ((pairs[static_cast<size_t>(pi)].first == ta &&
                 pairs[static_cast<size_t>(pi)].second == tb) ||
                (pairs[static_cast<size_t>(pi)].first == tb &&
                 pairs[static_cast<size_t>(pi)].second == ta))
                return pi;
        return -1;
    };
    for (const Edge& e : g.edges()) {
        int ta = vm.track(e.u), tb = vm.track(e.v);
        if (ta == tb) throw PreconditionError("saturate: intra-track edge");
        int pi = pair_index(ta, tb);
        int a = ta == pairs[static_cast<size_t>(pi)].first ? e.u : e.v;
        int b = a == e.u ? e.v : e.u;
        present[static_cast<size_t>(pi)][static_cast<size_t>(vm.pos(a))]
               [static_cast<size_t>(vm.pos(b))] = 1;
    }
    // No X-crossing among the existing edges.
    for (int pi = 0; pi < 3; ++pi) {
        const auto& grid = present[static_cast<size_t>(pi)];
        for (size_t i = 0; i < grid.size(); ++i)
            for (size_t j = 0; j < (i ? grid[i].size() : 0); ++j)
                if (grid[i][j])
                    for (size_t i2 = 0; i2 < i; ++i2)
                        for (size_t j2 = j + 1; j2 < grid[i2].size(); ++j2)
                            if (grid[i2][j2])
                                throw PreconditionError("saturate: layout has an X-crossing");
    }

    auto blocked = [&](int pi, int i, int j) {
        const auto& grid = present[static_cast<size_t>(pi)];
        for (size_t i2 = 0; i2 < grid.size(); ++i2) {
            for (size_t j2 = 0; j2 < grid[i2].size(); ++j2) {
                if (!grid[i2][j2]) continue;
                int di = static_cast<int>(i2), dj = static_cast<int>(j2);
                if ((i < di && dj < j) || (di < i && j < dj)) return true;
            }
        }
        return false;
    };

    std::vector<Edge> added;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pi = 0; pi < 3; ++pi) {
            auto [ta, tb] = pairs[static_cast<size_t>(pi)];
            const auto& ta_track = t.tracks[static_cast<size_t>(ta)];
            const auto& tb_track = t.tracks[static_cast<size_t>(tb)];
            for (size_t i = 0; i < ta_track.size(); ++i) {
                for (size_t j = 0; j < tb_track.size(); ++j) {
                    if (present[static_cast<size_t>(pi)][i][j]) continue;
                    if (blocked(pi, static_cast<int>(i), static_cast<int>(j))) continue;
                    present[static_cast<size_t>(pi)][i][j] = 1;
                    added.emplace_back(ta_track[i], tb_track[j]);
                    changed = true;
                }
            }
        }
    }

    std::vector<Edge> all_edges = g.edges();
    all_edges.insert(all_edges.end(), added.begin(), added.end());
    SaturatedTrackLayout out{t, Graph(g.vertex_count(), std::move(all_edges)), std::move(added)};
    return out;
}

}  // namespace

SaturatedTrackLayout saturate(const Graph& g, const TrackLayout& t) {
    if (t.track_count() != 3)
        throw MalformedInputError("saturate: expected exactly 3 tracks");
    Verdict v = verify_track_layout(g, t);
    if (!v.ok())
        throw PreconditionError("saturate: input is not a valid track layout: " +
                                v.violations.front().message);
    return saturate_restricted(g, t);
}

ObservationWitness observation_case(const SaturatedTrackLayout& s, int a, int b) {
    VertexMap vm(s.graph.vertex_count(), s.layout);
    int ta = vm.track(a), tb = vm.track(b);
    if (ta < 0 || tb < 0 || ta == tb)
        throw PreconditionError("observation_case: vertices must lie on distinct tracks");

    if (s.graph.has_edge(a, b)) return {ObservationCase::EdgePresent, Edge(a, b)};

    // an edge strictly "beyond a, before b" between the same pair of tracks
    for (const Edge& e : s.graph.edges()) {
        int u = e.u, v = e.v;
        if (vm.track(u) == tb && vm.track(v) == ta) std::swap(u, v);
        if (vm.track(u) != ta || vm.track(v) != tb) continue;
        if (vm.pos(u) > vm.pos(a) && vm.pos(v) < vm.pos(b))
            return {ObservationCase::FarCrossingEdge, e};
    }
    // a neighbour of a on b's track, beyond b
    for (int nb : s.graph.neighbours(a))
        if (vm.track(nb) == tb && vm.pos(nb) > vm.pos(b))
            return {ObservationCase::FurtherNeighbour, Edge(a, nb)};

    throw InternalAssertionError(
        "observation_case: no case applies (saturation fixpoint violated)",
        dump_document(instance_dump(s.graph, s.layout, "observation_case")));
}

// ---------------------------------------------------------------------------
// Spiral construction

namespace {

struct SpiralOutcome {
    enum class Kind { Complete, Cut, Stall } kind;
    SpiralPath path;   // Complete
    CutTriangle cut;   // Cut (and Stall: the inner triple)
};

// Greedy furthest-neighbour walk under the given rotation.  Returns the
// complete spiral, a cut triangle, or a stall at the inner triple.
SpiralOutcome spiral_worker(const SaturatedTrackLayout& s, std::array<int, 3> rot) {
    const Graph& g = s.graph;
    VertexMap vm(g.vertex_count(), s.layout);
    auto track = [&](int role) -> const std::vector<int>& {
        return s.layout.tracks[static_cast<size_t>(rot[static_cast<size_t>(role)])];
    };
    auto role_of = [&](int v) {
        for (int r = 0; r < 3; ++r)
            if (rot[static_cast<size_t>(r)] == vm.track(v)) return r;
        return -1;
    };
    for (int r = 0; r < 3; ++r)
        if (track(r).empty()) pipeline_assert_fail(g, s.layout, "spiral on an empty track");

    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> path;
    std::array<int, 3> last_pos{-1, -1, -1};  // last path position per role

    auto push = [&](int v, int role) {
        path.push_back(v);
        used[static_cast<size_t>(v)] = 1;
        last_pos[static_cast<size_t>(role)] = vm.pos(v);
    };
    push(track(0)[0], 0);

    while (true) {
        int k = static_cast<int>(path.size());  // current vertex is v_k (1-based)
        int vk = path.back();
        int next_role = k % 3;
        int prev = last_pos[static_cast<size_t>(next_role)];

        int best = -1;
        for (int nb : g.neighbours(vk)) {
            if (role_of(nb) != next_role) continue;
            int p = vm.pos(nb);
            if (p > prev) {
                best = std::max(best, p);
            } else if (!used[static_cast<size_t>(nb)]) {
                // Monotonicity invariant of the walk: everything at or below the
                // previous path vertex on that track is already on the path.
                pipeline_assert_fail(g, s.layout, "spiral found an unused neighbour behind the front");
            }
        }
        if (best >= 0) {
            push(track(next_role)[static_cast<size_t>(best)], next_role);
            continue;
        }

        // Stuck: the walk must close a triangle with the path vertex two steps back.
        if (k < 3 || !g.has_edge(vk, path[static_cast<size_t>(k - 3)]))
            pipeline_assert_fail(g, s.layout, "spiral stuck without a closing triangle");

        std::array<int, 3> triple{path[static_cast<size_t>(k - 3)],
                                  path[static_cast<size_t>(k - 2)], vk};
        bool is_outer = true, is_inner = true;
        for (int q : triple) {
            int tq = vm.track(q);
            is_outer &= q == s.layout.tracks[static_cast<size_t>(tq)].back();
            is_inner &= vm.pos(q) == 0;
        }
        SpiralOutcome out;
        if (is_outer) {
            out.kind = SpiralOutcome::Kind::Complete;
            out.path = SpiralPath{std::move(path), rot};
        } else {
            out.kind = is_inner ? SpiralOutcome::Kind::Stall : SpiralOutcome::Kind::Cut;
            out.cut = CutTriangle{triple};
        }
        return out;
    }
}

}  // namespace

std::variant<SpiralPath, CutTriangle> build_spiral(const SaturatedTrackLayout& s) {
    for (const auto& tr : s.layout.tracks)
        if (tr.empty()) throw PreconditionError("build_spiral: all three tracks must be non-empty");
    int n = 0;
    for (const auto& tr : s.layout.tracks) n += static_cast<int>(tr.size());
    if (n < 5) throw PreconditionError("build_spiral: needs at least 5 vertices");

    SpiralOutcome out = spiral_worker(s, {0, 1, 2});
    if (out.kind == SpiralOutcome::Kind::Complete) return out.path;
    return out.cut;
}

Layering assign_weak_layering(const SaturatedTrackLayout& s, const SpiralPath& p) {
    const Graph& g = s.graph;
    VertexMap vm(g.vertex_count(), s.layout);
    Layering l;
    l.weakness = 2;
    l.levels.assign(static_cast<size_t>(g.vertex_count()), 0);

    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
    // path positions per track, with their layer
    std::array<std::vector<std::pair<int, int>>, 3> stops;  // (pos, layer) per layout track
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        on_path[static_cast<size_t>(v)] = 1;
        l.levels[static_cast<size_t>(v)] = static_cast<int>(i) + 1;
        stops[static_cast<size_t>(vm.track(v))].emplace_back(vm.pos(v), static_cast<int>(i) + 1);
    }
    for (auto& list : stops) std::sort(list.begin(), list.end());

    for (int v : layout_vertices(s.layout)) {
        if (on_path[static_cast<size_t>(v)]) continue;
        const auto& list = stops[static_cast<size_t>(vm.track(v))];
        auto it = std::upper_bound(list.begin(), list.end(),
                                   std::make_pair(vm.pos(v), std::numeric_limits<int>::max()));
        if (it == list.end())
            pipeline_assert_fail(g, s.layout, "non-path vertex has no successor on its track");
        l.levels[static_cast<size_t>(v)] = it->second;
    }

    Verdict check = verify_layering_on(g, layout_vertices(s.layout), l);
    if (!check.ok())
        pipeline_assert_fail(g, s.layout, "spiral layering is not 2-weak: " +
                                              check.violations.front().message);
    return l;
}

LevelledDrawing unfold_remainder(const SaturatedTrackLayout& s, const SpiralPath& p,
                                 const Layering& l) {
    const Graph& g = s.graph;
    VertexMap vm(g.vertex_count(), s.layout);
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : p.vertices) on_path[static_cast<size_t>(v)] = 1;

    LevelledDrawing d;
    d.level_of.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : layout_vertices(s.layout)) {
        if (on_path[static_cast<size_t>(v)]) continue;
        d.vertices.push_back(v);
        d.level_of[static_cast<size_t>(v)] = l.level(v);
        d.rows[l.level(v)].push_back(v);
    }
    // within-level order = track order; each level holds one track's vertices
    for (auto& [level, row] : d.rows) {
        (void)level;
        int t0 = vm.track(row.front());
        for (int v : row)
            if (vm.track(v) != t0)
                pipeline_assert_fail(g, s.layout, "levelled drawing: level spans two tracks");
        std::sort(row.begin(), row.end(), [&](int a, int b) { return vm.pos(a) < vm.pos(b); });
    }

    std::vector<Edge> rest;
    for (const Edge& e : g.edges()) {
        if (on_path[static_cast<size_t>(e.u)] || on_path[static_cast<size_t>(e.v)]) continue;
        if (std::abs(l.level(e.u) - l.level(e.v)) != 1)
            pipeline_assert_fail(g, s.layout, "remainder edge does not join consecutive layers");
        rest.push_back(e);
    }
    d.graph = Graph(g.vertex_count(), std::move(rest));

    Verdict check = verify_levelled_drawing(d);
    if (!check.ok())
        pipeline_assert_fail(g, s.layout, "prism unfolding is not levelled planar: " +
                                              check.violations.front().message);
    return d;
}

LayeredPathDecomposition levelled_width1_decomposition(const LevelledDrawing& d) {
    Verdict pre = verify_levelled_drawing(d);
    if (!pre.ok())
        throw PreconditionError("levelled_width1_decomposition: input drawing is invalid: " +
                                pre.violations.front().message);

    // Left-to-right frontier sweep.  Each level keeps at most one open vertex;
    // a level may advance only when its open vertex has no unopened neighbour.
    // Deadlock would require an X-crossing, which the drawing does not have.
    std::vector<int> level_values;
    for (const auto& [value, row] : d.rows) {
        (void)row;
        level_values.push_back(value);
    }
    std::map<int, size_t> next_index;   // level -> next row position to open
    std::map<int, int> frontier;        // level -> open vertex (absent: none)
    for (int value : level_values) next_index[value] = 0;

    std::vector<char> opened(static_cast<size_t>(d.graph.vertex_count()), 0);
    auto has_unopened_neighbour = [&](int v) {
        for (int nb : d.graph.neighbours(v))
            if (!opened[static_cast<size_t>(nb)]) return true;
        return false;
    };

    PathDecomposition out;
    size_t remaining = d.vertices.size();
    while (remaining > 0) {
        int chosen_level = 0;
        bool found = false;
        for (int value : level_values) {
            if (next_index[value] >= d.rows.at(value).size()) continue;
            auto it = frontier.find(value);
            if (it != frontier.end() && has_unopened_neighbour(it->second)) continue;
            chosen_level = value;
            found = true;
            break;
        }
        if (!found)
            throw InternalAssertionError("levelled sweep deadlocked",
                                         dump_document(to_json(d.graph)));
        int v = d.rows.at(chosen_level)[next_index[chosen_level]++];
        frontier[chosen_level] = v;
        opened[static_cast<size_t>(v)] = 1;
        --remaining;

        std::vector<int> bag;
        for (const auto& [value, open_vertex] : frontier) {
            (void)value;
            bag.push_back(open_vertex);
        }
        std::sort(bag.begin(), bag.end());
        out.bags.push_back(std::move(bag));
    }

    // prune bags that duplicate or embed into a neighbour
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t i = 0; i < out.bags.size(); ++i) {
            bool drop = false;
            if (i + 1 < out.bags.size())
                drop |= std::includes(out.bags[i + 1].begin(), out.bags[i + 1].end(),
                                      out.bags[i].begin(), out.bags[i].end());
            if (i > 0)
                drop |= std::includes(out.bags[i - 1].begin(), out.bags[i - 1].end(),
                                      out.bags[i].begin(), out.bags[i].end());
            if (drop) {
                out.bags.erase(out.bags.begin() + static_cast<long>(i));
                shrunk = true;
                break;
            }
        }
    }

    LayeredPathDecomposition result;
    result.decomposition = std::move(out);
    result.layering.weakness = 1;
    result.layering.levels = d.level_of;
    result.layered_width = layered_width_on(d.vertices, result.decomposition, result.layering);

    Verdict check = verify_path_decomposition_on(d.graph, d.vertices, result.decomposition);
    if (!check.ok() || result.layered_width > 1)
        throw InternalAssertionError("levelled sweep produced an invalid decomposition",
                                     dump_document(to_json(d.graph)));
    return result;
}

WeakLayeredResult merge_with_path(const SaturatedTrackLayout& s,
                                  const LayeredPathDecomposition& wd, const SpiralPath& p,
                                  const Layering& l) {
    std::vector<int> path_sorted = p.vertices;
    std::sort(path_sorted.begin(), path_sorted.end());

    WeakLayeredResult out;
    out.layering = l;
    for (int t = 0; t < 3; ++t) {
        out.first_triple[static_cast<size_t>(t)] = s.layout.tracks[static_cast<size_t>(t)].front();
        out.last_triple[static_cast<size_t>(t)] = s.layout.tracks[static_cast<size_t>(t)].back();
    }

    std::vector<std::vector<int>> bags = wd.decomposition.bags;
    if (bags.empty()) bags.push_back({});
    for (auto& bag : bags) {
        std::vector<int> merged;
        std::set_union(bag.begin(), bag.end(), path_sorted.begin(), path_sorted.end(),
                       std::back_inserter(merged));
        bag = std::move(merged);
    }
    std::vector<int> first(out.first_triple.begin(), out.first_triple.end());
    std::vector<int> last(out.last_triple.begin(), out.last_triple.end());
    std::sort(first.begin(), first.end());
    std::sort(last.begin(), last.end());
    bags.insert(bags.begin(), first);
    bags.push_back(last);
    bags.erase(std::unique(bags.begin(), bags.end()), bags.end());
    out.decomposition.bags = std::move(bags);

    int width = layered_width_on(layout_vertices(s.layout), out.decomposition, out.layering);
    if (width > 2)
        pipeline_assert_fail(s.graph, s.layout,
                             "merged decomposition has layered width " + std::to_string(width));
    return out;
}

// ---------------------------------------------------------------------------
// Recursion driver

namespace {

// Lemma-4 conditions, checked verbatim as predicates on a (sub)instance.
void check_weak_result(const SaturatedTrackLayout& s, std::array<int, 3> rot,
                       const WeakLayeredResult& r) {
    const Graph& g = s.graph;
    std::vector<int> vertices = layout_vertices(s.layout);

    Verdict pd = verify_path_decomposition_on(g, vertices, r.decomposition);
    if (!pd.ok())
        pipeline_assert_fail(g, s.layout, "weak result: " + pd.violations.front().message);
    if (r.layering.weakness != 2)
        pipeline_assert_fail(g, s.layout, "weak result: layering weakness is not 2");
    Verdict lv = verify_layering_on(g, vertices, r.layering);
    if (!lv.ok())
        pipeline_assert_fail(g, s.layout, "weak result: " + lv.violations.front().message);
    if (layered_width_on(vertices, r.decomposition, r.layering) > 2)
        pipeline_assert_fail(g, s.layout, "weak result: layered width exceeds 2");

    // Condition 1: layers agree with the rotated track labels mod 3.
    for (int role = 0; role < 3; ++role)
        for (int v : s.layout.tracks[static_cast<size_t>(rot[static_cast<size_t>(role)])])
            if (((r.layering.level(v) - (role + 1)) % 3 + 3) % 3 != 0)
                pipeline_assert_fail(g, s.layout, "condition 1 violated");

    // Conditions 2 and 3: first bag is the inner triple, on layers 1,2,3 by role.
    std::vector<int> inner, outer;
    for (int t = 0; t < 3; ++t) {
        inner.push_back(s.layout.tracks[static_cast<size_t>(t)].front());
        outer.push_back(s.layout.tracks[static_cast<size_t>(t)].back());
    }
    std::sort(inner.begin(), inner.end());
    std::sort(outer.begin(), outer.end());
    if (r.decomposition.bags.empty() || r.decomposition.bags.front() != inner)
        pipeline_assert_fail(g, s.layout, "condition 2 violated");
    for (int role = 0; role < 3; ++role) {
        int v = s.layout.tracks[static_cast<size_t>(rot[static_cast<size_t>(role)])].front();
        if (r.layering.level(v) != role + 1)
            pipeline_assert_fail(g, s.layout, "condition 3 violated");
    }

    // Condition 4: last bag is the outer triple.
    if (r.decomposition.bags.back() != outer)
        pipeline_assert_fail(g, s.layout, "condition 4 violated");

    // Condition 5: the outer triple sits on 3 distinct consecutive layers ending at the top.
    int m = 0;
    for (int v : vertices) m = std::max(m, r.layering.level(v));
    std::vector<int> outer_levels;
    for (int v : outer) outer_levels.push_back(r.layering.level(v));
    std::sort(outer_levels.begin(), outer_levels.end());
    if (outer_levels != std::vector<int>{m - 2, m - 1, m})
        pipeline_assert_fail(g, s.layout, "condition 5 violated");
}

// Fallback for walks that stall on the inner triple: consume the three
// monotone staircases with a frontier of at most two vertices per track, at
// the three-layer layering given by the track labels.  A backtracking search
// over the interleaving always succeeds on saturated layouts.
WeakLayeredResult fallback_cylinder_sweep(const SaturatedTrackLayout& s, std::array<int, 3> rot,
                                          json* trace, int depth) {
    const Graph& g = s.graph;
    VertexMap vm(g.vertex_count(), s.layout);
    auto role_of = [&](int v) {
        for (int r = 0; r < 3; ++r)
            if (rot[static_cast<size_t>(r)] == vm.track(v)) return r;
        return -1;
    };

    struct StripEdge {
        int u, v;  // u on the strip's first role
    };
    std::array<std::vector<StripEdge>, 3> strips;  // (role r, role r+1)
    for (const Edge& e : g.edges()) {
        int ru = role_of(e.u), rv = role_of(e.v);
        int u = e.u, v = e.v;
        for (int strip = 0; strip < 3; ++strip) {
            int fr = strip, sr = (strip + 1) % 3;
            if ((ru == fr && rv == sr) || (ru == sr && rv == fr)) {
                if (ru != fr) std::swap(u, v);
                strips[static_cast<size_t>(strip)].push_back({u, v});
                break;
            }
        }
    }
    for (auto& strip : strips) {
        std::sort(strip.begin(), strip.end(), [&](const StripEdge& a, const StripEdge& b) {
            if (vm.pos(a.u) != vm.pos(b.u)) return vm.pos(a.u) < vm.pos(b.u);
            return vm.pos(a.v) < vm.pos(b.v);
        });
        for (size_t i = 1; i < strip.size(); ++i)
            if (vm.pos(strip[i - 1].v) > vm.pos(strip[i].v))
                pipeline_assert_fail(g, s.layout, "fallback: strip is not a staircase");
    }

    std::vector<int> degree(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& strip : strips)
        for (const StripEdge& e : strip) {
            degree[static_cast<size_t>(e.u)]++;
            degree[static_cast<size_t>(e.v)]++;
        }

    std::vector<char> is_inner(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> is_outer(static_cast<size_t>(g.vertex_count()), 0);
    for (int t = 0; t < 3; ++t) {
        is_inner[static_cast<size_t>(s.layout.tracks[static_cast<size_t>(t)].front())] = 1;
        is_outer[static_cast<size_t>(s.layout.tracks[static_cast<size_t>(t)].back())] = 1;
    }
    for (int v : layout_vertices(s.layout))
        if (degree[static_cast<size_t>(v)] == 0)
            pipeline_assert_fail(g, s.layout, "fallback: isolated vertex in a saturated layout");

    // DFS over strip pointers with memoised dead states.
    std::array<size_t, 3> ptr{0, 0, 0};
    std::vector<int> consumed(static_cast<size_t>(g.vertex_count()), 0);
    std::array<int, 3> active{1, 1, 1};  // the inner triple starts open
    std::unordered_set<uint64_t> dead;
    const uint64_t stride = static_cast<uint64_t>(g.vertex_count()) + 2;
    auto encode = [&] { return (ptr[0] * stride + ptr[1]) * stride + ptr[2]; };
    std::vector<std::pair<int, StripEdge>> order;  // (strip, edge) in consumption order

    auto opens = [&](int v) { return consumed[static_cast<size_t>(v)] == 0 && !is_inner[static_cast<size_t>(v)]; };
    auto finishes = [&](int v) {
        return consumed[static_cast<size_t>(v)] == degree[static_cast<size_t>(v)] &&
               !is_outer[static_cast<size_t>(v)];
    };

    size_t total = strips[0].size() + strips[1].size() + strips[2].size();
    std::function<bool()> dfs = [&]() -> bool {
        if (order.size() == total) return true;
        if (dead.count(encode())) return false;
        for (int strip = 0; strip < 3; ++strip) {
            if (ptr[static_cast<size_t>(strip)] >= strips[static_cast<size_t>(strip)].size())
                continue;
            StripEdge e = strips[static_cast<size_t>(strip)][ptr[static_cast<size_t>(strip)]];
            int ru = role_of(e.u), rv = role_of(e.v);
            int grow_u = opens(e.u) ? 1 : 0, grow_v = opens(e.v) ? 1 : 0;
            if (active[static_cast<size_t>(ru)] + grow_u > 2 ||
                active[static_cast<size_t>(rv)] + grow_v > 2)
                continue;
            active[static_cast<size_t>(ru)] += grow_u;
            active[static_cast<size_t>(rv)] += grow_v;
            consumed[static_cast<size_t>(e.u)]++;
            consumed[static_cast<size_t>(e.v)]++;
            int shrink_u = finishes(e.u) ? 1 : 0, shrink_v = finishes(e.v) ? 1 : 0;
            active[static_cast<size_t>(ru)] -= shrink_u;
            active[static_cast<size_t>(rv)] -= shrink_v;
            ptr[static_cast<size_t>(strip)]++;
            order.emplace_back(strip, e);
            if (dfs()) return true;
            order.pop_back();
            ptr[static_cast<size_t>(strip)]--;
            active[static_cast<size_t>(ru)] += shrink_u;
            active[static_cast<size_t>(rv)] += shrink_v;
            consumed[static_cast<size_t>(e.u)]--;
            consumed[static_cast<size_t>(e.v)]--;
            active[static_cast<size_t>(ru)] -= grow_u;
            active[static_cast<size_t>(rv)] -= grow_v;
        }
        dead.insert(encode());
        return false;
    };
    if (!dfs())
        pipeline_assert_fail(g, s.layout, "fallback sweep found no width-2 interleaving");

    // Bag intervals: step 0 = inner bag, steps 1..T = consumption, T+1 = outer bag.
    int T = static_cast<int>(order.size());
    std::vector<int> start(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> finish(static_cast<size_t>(g.vertex_count()), -1);
    for (int v : layout_vertices(s.layout)) {
        start[static_cast<size_t>(v)] = is_inner[static_cast<size_t>(v)] ? 0 : -1;
        finish[static_cast<size_t>(v)] = is_outer[static_cast<size_t>(v)] ? T + 1 : -1;
    }
    for (int step = 1; step <= T; ++step) {
        const StripEdge& e = order[static_cast<size_t>(step - 1)].second;
        for (int v : {e.u, e.v}) {
            if (start[static_cast<size_t>(v)] < 0) start[static_cast<size_t>(v)] = step;
            if (!is_outer[static_cast<size_t>(v)]) finish[static_cast<size_t>(v)] = step;
        }
    }

    WeakLayeredResult out;
    out.layering.weakness = 2;
    out.layering.levels.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : layout_vertices(s.layout))
        out.layering.levels[static_cast<size_t>(v)] = role_of(v) + 1;
    for (int t = 0; t < 3; ++t) {
        out.first_triple[static_cast<size_t>(t)] = s.layout.tracks[static_cast<size_t>(t)].front();
        out.last_triple[static_cast<size_t>(t)] = s.layout.tracks[static_cast<size_t>(t)].back();
    }
    for (int step = 0; step <= T + 1; ++step) {
        std::vector<int> bag;
        for (int v : layout_vertices(s.layout))
            if (start[static_cast<size_t>(v)] <= step && step <= finish[static_cast<size_t>(v)])
                bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        if (!out.decomposition.bags.empty() && out.decomposition.bags.back() == bag) continue;
        out.decomposition.bags.push_back(std::move(bag));
    }

    if (trace)
        trace->push_back({{"stage", "fallback_sweep"},
                          {"depth", depth},
                          {"vertices", static_cast<int>(layout_vertices(s.layout).size())}});
    check_weak_result(s, rot, out);
    return out;
}

WeakLayeredResult lemma4_weak(const SaturatedTrackLayout& s, std::array<int, 3> rot, json* trace,
                              int depth) {
    const Graph& g = s.graph;
    VertexMap vm(g.vertex_count(), s.layout);

    SpiralOutcome outcome = spiral_worker(s, rot);
    if (outcome.kind == SpiralOutcome::Kind::Complete) {
        const SpiralPath& path = outcome.path;
        Layering l = assign_weak_layering(s, path);
        LevelledDrawing drawing = unfold_remainder(s, path, l);
        LayeredPathDecomposition wd = levelled_width1_decomposition(drawing);
        WeakLayeredResult weak = merge_with_path(s, wd, path, l);
        if (trace)
            trace->push_back({{"stage", "spiral"},
                              {"depth", depth},
                              {"path", path.vertices},
                              {"rotation", std::vector<int>(rot.begin(), rot.end())}});
        check_weak_result(s, rot, weak);
        return weak;
    }
    if (outcome.kind == SpiralOutcome::Kind::Stall)
        return fallback_cylinder_sweep(s, rot, trace, depth);

    // Cut: split at the triangle, solve both sides, join at the junction.
    const std::array<int, 3>& triangle = outcome.cut.vertices;
    std::array<int, 3> cut_pos{};  // per layout track
    for (int q : triangle) cut_pos[static_cast<size_t>(vm.track(q))] = vm.pos(q);
    if (trace)
        trace->push_back({{"stage", "cut"},
                          {"depth", depth},
                          {"triangle", std::vector<int>(triangle.begin(), triangle.end())}});

    TrackLayout prefix, suffix;
    prefix.tracks.assign(3, {});
    suffix.tracks.assign(3, {});
    std::vector<char> in_prefix(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> in_suffix(static_cast<size_t>(g.vertex_count()), 0);
    for (int t = 0; t < 3; ++t) {
        const auto& track = s.layout.tracks[static_cast<size_t>(t)];
        for (int i = 0; i <= cut_pos[static_cast<size_t>(t)]; ++i) {
            prefix.tracks[static_cast<size_t>(t)].push_back(track[static_cast<size_t>(i)]);
            in_prefix[static_cast<size_t>(track[static_cast<size_t>(i)])] = 1;
        }
        for (size_t i = static_cast<size_t>(cut_pos[static_cast<size_t>(t)]); i < track.size(); ++i) {
            suffix.tracks[static_cast<size_t>(t)].push_back(track[i]);
            in_suffix[static_cast<size_t>(track[i])] = 1;
        }
    }
    std::vector<Edge> prefix_edges, suffix_edges;
    for (const Edge& e : g.edges()) {
        bool pe = in_prefix[static_cast<size_t>(e.u)] && in_prefix[static_cast<size_t>(e.v)];
        bool se = in_suffix[static_cast<size_t>(e.u)] && in_suffix[static_cast<size_t>(e.v)];
        if (!pe && !se)
            pipeline_assert_fail(g, s.layout, "cut triangle does not separate the layout");
        if (pe) prefix_edges.push_back(e);
        if (se) suffix_edges.push_back(e);
    }

    SaturatedTrackLayout sat1 = saturate_restricted(Graph(g.vertex_count(), prefix_edges), prefix);
    WeakLayeredResult r1 = lemma4_weak(sat1, rot, trace, depth + 1);

    // Junction: the triangle occupies the top three layers of the prefix result.
    int m = 0;
    for (int v : layout_vertices(prefix)) m = std::max(m, r1.layering.level(v));
    std::array<int, 3> by_level{-1, -1, -1};  // triangle vertex on layer m-2, m-1, m
    for (int q : triangle) {
        int lev = r1.layering.level(q);
        if (lev < m - 2 || lev > m)
            pipeline_assert_fail(g, s.layout, "junction triangle misses the top layers");
        by_level[static_cast<size_t>(lev - (m - 2))] = q;
    }
    auto role_under = [&](int v, std::array<int, 3> rr) {
        for (int r = 0; r < 3; ++r)
            if (rr[static_cast<size_t>(r)] == vm.track(v)) return r;
        return -1;
    };
    int base_role = role_under(by_level[0], rot);
    std::array<int, 3> rot2{rot[static_cast<size_t>(base_role)],
                            rot[static_cast<size_t>((base_role + 1) % 3)],
                            rot[static_cast<size_t>((base_role + 2) % 3)]};
    if (role_under(by_level[1], rot) != (base_role + 1) % 3 ||
        role_under(by_level[2], rot) != (base_role + 2) % 3)
        pipeline_assert_fail(g, s.layout, "junction layers disagree with the track rotation");

    SaturatedTrackLayout sat2 = saturate_restricted(Graph(g.vertex_count(), suffix_edges), suffix);
    WeakLayeredResult r2 = lemma4_weak(sat2, rot2, trace, depth + 1);

    int offset = m - 3;
    WeakLayeredResult merged;
    merged.layering.weakness = 2;
    merged.layering.levels.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : layout_vertices(prefix))
        merged.layering.levels[static_cast<size_t>(v)] = r1.layering.level(v);
    for (int v : layout_vertices(suffix)) {
        int lev = r2.layering.level(v) + offset;
        if (in_prefix[static_cast<size_t>(v)] &&
            merged.layering.levels[static_cast<size_t>(v)] != lev)
            pipeline_assert_fail(g, s.layout, "junction layers do not line up");
        merged.layering.levels[static_cast<size_t>(v)] = lev;
    }
    merged.decomposition.bags = r1.decomposition.bags;
    for (const auto& bag : r2.decomposition.bags)
        if (merged.decomposition.bags.empty() || merged.decomposition.bags.back() != bag)
            merged.decomposition.bags.push_back(bag);
    for (int t = 0; t < 3; ++t) {
        merged.first_triple[static_cast<size_t>(t)] =
            s.layout.tracks[static_cast<size_t>(t)].front();
        merged.last_triple[static_cast<size_t>(t)] =
            s.layout.tracks[static_cast<size_t>(t)].back();
    }
    check_weak_result(s, rot, merged);
    return merged;
}

// Layouts with an empty track are levelled drawings already (at most two
// tracks of vertices, all edges between them); the width-1 sweep applies.
LayeredPathDecomposition decompose_with_empty_track(const Graph& g, const TrackLayout& t) {
    std::vector<const std::vector<int>*> nonempty;
    for (const auto& track : t.tracks)
        if (!track.empty()) nonempty.push_back(&track);

    LevelledDrawing d;
    d.graph = g;
    d.level_of.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t i = 0; i < nonempty.size(); ++i) {
        for (int v : *nonempty[i]) {
            d.vertices.push_back(v);
            d.level_of[static_cast<size_t>(v)] = static_cast<int>(i);
            d.rows[static_cast<int>(i)].push_back(v);
        }
    }
    if (g.vertex_count() == 0) {
        LayeredPathDecomposition empty;
        empty.layering.weakness = 1;
        return empty;
    }
    return levelled_width1_decomposition(d);
}

}  // namespace

LayeredPathDecomposition decompose_3track(const Graph& g, const TrackLayout& t) {
    return decompose_3track_full(g, t).decomposition;
}

TrackPipelineResult decompose_3track_full(const Graph& g, const TrackLayout& t, bool want_trace) {
    if (t.track_count() != 3)
        throw MalformedInputError("decompose_3track: expected exactly 3 tracks");
    Verdict v = verify_track_layout(g, t);
    if (!v.ok())
        throw PreconditionError("decompose_3track: input is not a valid 3-track layout: " +
                                v.violations.front().message);

    TrackPipelineResult out;
    out.trace = json::array();
    json* trace = want_trace ? &out.trace : nullptr;

    bool has_empty = false;
    for (const auto& track : t.tracks) has_empty |= track.empty();
    if (has_empty) {
        if (trace) trace->push_back({{"stage", "two_track_direct"}});
        out.decomposition = decompose_with_empty_track(g, t);
    } else {
        SaturatedTrackLayout sat = saturate_restricted(g, t);
        if (trace) {
            json added = json::array();
            for (const Edge& e : sat.added_edges) added.push_back({e.u, e.v});
            trace->push_back({{"stage", "saturate"}, {"added_edges", added}});
        }
        WeakLayeredResult weak = lemma4_weak(sat, {0, 1, 2}, trace, 0);
        if (trace)
            trace->push_back({{"stage", "weak_result"},
                              {"bags", weak.decomposition.bags},
                              {"levels", weak.layering.levels}});
        out.decomposition = collapse_layering(sat.graph, weak.layering, weak.decomposition);
        out.weak = std::move(weak);
        out.saturated = std::move(sat);
        if (trace)
            trace->push_back({{"stage", "collapse"},
                              {"layered_width", out.decomposition.layered_width}});
    }

    // Final gate against the original graph: the construction worked on the
    // saturated supergraph, the verdict is about g itself.
    Verdict check = verify_layered_path_decomposition(g, out.decomposition);
    if (!check.ok())
        pipeline_assert_fail(g, t, "final decomposition failed verification: " +
                                       check.violations.front().message);
    if (out.decomposition.layered_width > 4)
        pipeline_assert_fail(g, t, "final decomposition exceeds width 4");
    return out;
}

}  // namespace lpwkit
