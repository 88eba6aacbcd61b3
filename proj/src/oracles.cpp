#include "lpwkit/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>

#include "lpwkit/json_io.hpp"

namespace lpwkit {

namespace {

class Deadline {
public:
    explicit Deadline(double seconds)
        : enabled_(seconds > 0),
          end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds > 0 ? seconds : 0))) {}

    void check(const char* what) const {
        if (enabled_ && std::chrono::steady_clock::now() > end_)
            throw BudgetExceededError(std::string(what) + ": time limit exceeded");
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point end_;
};

void check_vertex_budget(const Graph& g, const OracleBudget& b, const char* what) {
    if (g.vertex_count() > b.max_vertices)
        throw BudgetExceededError(std::string(what) + ": graph exceeds max_vertices budget");
}

// Minimum proper colouring of the conflict graph, capped: returns min(chi, cap).
int chromatic_upto(const std::vector<uint64_t>& adj, int cap) {
    int m = static_cast<int>(adj.size());
    if (m == 0 || cap <= 0) return 0;
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = std::popcount(adj[static_cast<size_t>(a)]);
        int db = std::popcount(adj[static_cast<size_t>(b)]);
        if (da != db) return da > db;
        return a < b;
    });

    std::vector<int> colour(static_cast<size_t>(m), 0);
    int best = cap;
    auto rec = [&](auto&& self, int idx, int used) -> void {
        if (used >= best) return;
        if (idx == m) {
            best = used;
            return;
        }
        int v = order[static_cast<size_t>(idx)];
        uint64_t conflicts = 0;
        for (int u = 0; u < m; ++u)
            if (colour[static_cast<size_t>(u)] > 0 && (adj[static_cast<size_t>(v)] >> u & 1))
                conflicts |= 1ULL << colour[static_cast<size_t>(u)];
        for (int c = 1; c <= used; ++c) {
            if (conflicts >> c & 1) continue;
            colour[static_cast<size_t>(v)] = c;
            self(self, idx + 1, used);
            colour[static_cast<size_t>(v)] = 0;
        }
        if (used + 1 < best) {
            colour[static_cast<size_t>(v)] = used + 1;
            self(self, idx + 1, used + 1);
            colour[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Greedy colouring of the conflict graph; used to materialise the witness for
// the winning order (its count is rechecked against the exact value).
std::vector<int> colour_exactly(const std::vector<uint64_t>& adj, int chi) {
    int m = static_cast<int>(adj.size());
    std::vector<int> colour(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == m) return true;
        uint64_t conflicts = 0;
        for (int u = 0; u < m; ++u)
            if (colour[static_cast<size_t>(u)] > 0 && (adj[static_cast<size_t>(idx)] >> u & 1))
                conflicts |= 1ULL << colour[static_cast<size_t>(u)];
        for (int c = 1; c <= chi; ++c) {
            if (conflicts >> c & 1) continue;
            colour[static_cast<size_t>(idx)] = c;
            if (self(self, idx + 1)) return true;
            colour[static_cast<size_t>(idx)] = 0;
        }
        return false;
    };
    rec(rec, 0);
    return colour;
}

}  // namespace

StackNumberResult exact_stack_number(const Graph& g, const OracleBudget& b) {
    check_vertex_budget(g, b, "exact_stack_number");
    Deadline deadline(b.time_limit_s);

    int n = g.vertex_count();
    int m = g.edge_count();
    StackNumberResult result;
    result.witness.order.resize(static_cast<size_t>(n));
    std::iota(result.witness.order.begin(), result.witness.order.end(), 0);
    result.witness.stack_of_edge.assign(static_cast<size_t>(m), 0);
    if (m == 0) {
        result.value = 0;
        result.witness.stack_count = 0;
        return result;
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(static_cast<size_t>(n));
    int best = m + 1;
    std::vector<int> best_order;
    std::vector<uint64_t> best_adj;

    long scanned = 0;
    do {
        if (n >= 2 && order.front() > order.back()) continue;  // reversal symmetry
        if (++scanned % 256 == 0) deadline.check("exact_stack_number");
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

        // conflict graph over edges under this order
        std::vector<uint64_t> adj(static_cast<size_t>(m), 0);
        std::vector<std::pair<int, int>> spans(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            int a = pos[static_cast<size_t>(g.edges()[static_cast<size_t>(i)].u)];
            int c = pos[static_cast<size_t>(g.edges()[static_cast<size_t>(i)].v)];
            spans[static_cast<size_t>(i)] = {std::min(a, c), std::max(a, c)};
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                auto [a, bspan] = spans[static_cast<size_t>(i)];
                auto [c, d] = spans[static_cast<size_t>(j)];
                if ((a < c && c < bspan && bspan < d) || (c < a && a < d && d < bspan)) {
                    adj[static_cast<size_t>(i)] |= 1ULL << j;
                    adj[static_cast<size_t>(j)] |= 1ULL << i;
                }
            }
        int chi = chromatic_upto(adj, best);
        if (chi < best) {
            best = chi;
            best_order = order;
            best_adj = adj;
            if (best == 1) break;  // cannot beat a single stack on a non-empty graph
        }
    } while (std::next_permutation(order.begin(), order.end()));

    result.value = best;
    result.witness.order = best_order;
    std::vector<int> colour = colour_exactly(best_adj, best);
    for (int i = 0; i < m; ++i)
        result.witness.stack_of_edge[static_cast<size_t>(i)] = colour[static_cast<size_t>(i)] - 1;
    result.witness.stack_count = best;
    return result;
}

// ---------------------------------------------------------------------------
// Layered pathwidth

namespace {

struct ComponentResult {
    int width = 0;
    std::vector<int> levels;                 // per component vertex (component-local index)
    std::vector<std::vector<int>> bags;      // component-local ids
};

// Exact layered pathwidth of one connected component given as local adjacency.
ComponentResult component_lpw(const std::vector<std::vector<int>>& adj, int s, int span_cap,
                              const Deadline& deadline) {
    int n = static_cast<int>(adj.size());
    ComponentResult best;
    best.width = n + 1;

    // BFS order guarantees each vertex after the first has an assigned neighbour.
    std::vector<int> bfs;
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        bfs.push_back(0);
        seen[0] = 1;
        for (size_t head = 0; head < bfs.size(); ++head)
            for (int nb : adj[static_cast<size_t>(bfs[head])])
                if (!seen[static_cast<size_t>(nb)]) {
                    seen[static_cast<size_t>(nb)] = 1;
                    bfs.push_back(nb);
                }
    }

    std::set<std::vector<int>> tried;
    std::vector<int> levels(static_cast<size_t>(n), 0);

    // Evaluates one layering by subset DP over elimination orders.
    auto evaluate = [&](const std::vector<int>& canonical) {
        deadline.check("exact_layered_pathwidth");
        size_t size = 1ULL << n;
        std::vector<int> cost(size, std::numeric_limits<int>::max());
        std::vector<int> parent(size, -1);
        cost[0] = 0;
        for (uint32_t mask = 0; mask < size; ++mask) {
            if (cost[mask] == std::numeric_limits<int>::max()) continue;
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1) continue;
                uint32_t next = mask | (1u << v);
                // bag = {v} + vertices of mask with a neighbour outside mask
                std::vector<int> layer_count(static_cast<size_t>(n), 0);
                int bag_max = ++layer_count[static_cast<size_t>(canonical[static_cast<size_t>(v)])];
                for (int u = 0; u < n; ++u) {
                    if (!(mask >> u & 1)) continue;
                    bool boundary = false;
                    for (int nb : adj[static_cast<size_t>(u)])
                        if (!(mask >> nb & 1)) {
                            boundary = true;
                            break;
                        }
                    if (boundary)
                        bag_max = std::max(bag_max, ++layer_count[static_cast<size_t>(
                                                        canonical[static_cast<size_t>(u)])]);
                }
                int value = std::max(cost[mask], bag_max);
                if (value < cost[next]) {
                    cost[next] = value;
                    parent[next] = v;
                }
            }
        }
        if (cost[size - 1] < best.width) {
            best.width = cost[size - 1];
            best.levels = canonical;
            // reconstruct the elimination order and its bags
            std::vector<int> order;
            uint32_t mask = static_cast<uint32_t>(size - 1);
            while (mask) {
                int v = parent[mask];
                order.push_back(v);
                mask &= ~(1u << v);
            }
            std::reverse(order.begin(), order.end());
            best.bags.clear();
            uint32_t placed = 0;
            for (int v : order) {
                std::vector<int> bag{v};
                for (int u = 0; u < n; ++u) {
                    if (!(placed >> u & 1)) continue;
                    // u stays in the bag while it has a neighbour at or after v
                    for (int nb : adj[static_cast<size_t>(u)])
                        if (!(placed >> nb & 1)) {
                            bag.push_back(u);
                            break;
                        }
                }
                std::sort(bag.begin(), bag.end());
                best.bags.push_back(std::move(bag));
                placed |= 1u << v;
            }
        }
    };

    // DFS over level assignments in BFS order, pruned by the span cap.
    auto assign = [&](auto&& self, size_t idx, int lo, int hi) -> void {
        if (idx == bfs.size()) {
            std::vector<int> canonical(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) canonical[static_cast<size_t>(v)] = levels[static_cast<size_t>(v)] - lo;
            if (tried.insert(canonical).second) evaluate(canonical);
            return;
        }
        deadline.check("exact_layered_pathwidth");
        int v = bfs[idx];
        int from = std::numeric_limits<int>::min(), to = std::numeric_limits<int>::max();
        for (int nb : adj[static_cast<size_t>(v)]) {
            // only BFS-earlier neighbours are assigned
            bool assigned = false;
            for (size_t k = 0; k < idx; ++k)
                if (bfs[k] == nb) {
                    assigned = true;
                    break;
                }
            if (!assigned) continue;
            from = std::max(from, levels[static_cast<size_t>(nb)] - s);
            to = std::min(to, levels[static_cast<size_t>(nb)] + s);
        }
        if (idx == 0) from = to = 0;
        for (int level = from; level <= to; ++level) {
            int nlo = std::min(lo, level), nhi = std::max(hi, level);
            if (nhi - nlo + 1 > span_cap) continue;
            levels[static_cast<size_t>(v)] = level;
            self(self, idx + 1, nlo, nhi);
        }
    };
    assign(assign, 0, 0, 0);
    return best;
}

LayeredPathwidthResult lpw_impl(const Graph& g, int s, const OracleBudget& b, const char* what) {
    check_vertex_budget(g, b, what);
    if (s < 1) throw PreconditionError(std::string(what) + ": weakness must be >= 1");
    Deadline deadline(b.time_limit_s);
    // Any layering can be gap-compressed without changing widths or violating
    // the span constraint, so n distinct values are always enough for an exact
    // answer.  A user cap below that cannot be honoured exactly: reject it.
    if (b.max_layer_span > 0 && b.max_layer_span < g.vertex_count())
        throw BudgetExceededError(std::string(what) +
                                  ": max_layer_span below the exactness threshold (n)");
    int span_cap = g.vertex_count();

    LayeredPathwidthResult out;
    out.witness.layering.weakness = s;
    out.witness.layering.levels.assign(static_cast<size_t>(g.vertex_count()), 0);
    if (g.vertex_count() == 0) {
        out.value = 0;
        return out;
    }

    // Solve per connected component; widths combine by max, bags by concatenation.
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    int comp_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (comp[static_cast<size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<size_t>(v)] = comp_count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int nb : g.neighbours(u))
                if (comp[static_cast<size_t>(nb)] < 0) {
                    comp[static_cast<size_t>(nb)] = comp_count;
                    stack.push_back(nb);
                }
        }
        ++comp_count;
    }

    int width = 0;
    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> members;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[static_cast<size_t>(v)] == c) members.push_back(v);
        std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < members.size(); ++i) local[static_cast<size_t>(members[i])] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(members.size());
        for (size_t i = 0; i < members.size(); ++i)
            for (int nb : g.neighbours(members[i]))
                adj[i].push_back(local[static_cast<size_t>(nb)]);

        ComponentResult cr = component_lpw(adj, s, span_cap, deadline);
        width = std::max(width, cr.width);
        for (size_t i = 0; i < members.size(); ++i)
            out.witness.layering.levels[static_cast<size_t>(members[i])] = cr.levels[i];
        for (const auto& bag : cr.bags) {
            std::vector<int> global_bag;
            for (int v : bag) global_bag.push_back(members[static_cast<size_t>(v)]);
            std::sort(global_bag.begin(), global_bag.end());
            out.witness.decomposition.bags.push_back(std::move(global_bag));
        }
    }
    out.value = width;
    out.witness.layered_width = width;
    return out;
}

}  // namespace

LayeredPathwidthResult exact_layered_pathwidth(const Graph& g, const OracleBudget& b) {
    return lpw_impl(g, 1, b, "exact_layered_pathwidth");
}

LayeredPathwidthResult exact_weak_layered_pathwidth(const Graph& g, int s, const OracleBudget& b) {
    return lpw_impl(g, s, b, "exact_weak_layered_pathwidth");
}

// ---------------------------------------------------------------------------
// 3-track realizability

std::optional<TrackLayout> has_3track_layout(const Graph& g, const OracleBudget& b) {
    check_vertex_budget(g, b, "has_3track_layout");
    Deadline deadline(b.time_limit_s);
    int n = g.vertex_count();
    if (n == 0) return TrackLayout{{{}, {}, {}}};

    // Insert vertices (most-constrained first) at every position of every
    // track; prune on independence and X-crossings.  First witness wins;
    // exhaustion proves none exists.
    std::vector<int> vertices(static_cast<size_t>(n));
    std::iota(vertices.begin(), vertices.end(), 0);
    std::sort(vertices.begin(), vertices.end(), [&](int a, int b2) {
        size_t da = g.neighbours(a).size(), db = g.neighbours(b2).size();
        if (da != db) return da > db;
        return a < b2;
    });

    TrackLayout layout;
    layout.tracks.assign(3, {});
    std::vector<char> placed(static_cast<size_t>(n), 0);
    long nodes = 0;

    auto creates_conflict = [&](int v) {
        // checks edges at v against the partial layout
        std::vector<int> track_of(static_cast<size_t>(n), -1), pos(static_cast<size_t>(n), -1);
        for (size_t t = 0; t < 3; ++t)
            for (size_t i = 0; i < layout.tracks[t].size(); ++i) {
                track_of[static_cast<size_t>(layout.tracks[t][i])] = static_cast<int>(t);
                pos[static_cast<size_t>(layout.tracks[t][i])] = static_cast<int>(i);
            }
        for (int nb : g.neighbours(v)) {
            if (!placed[static_cast<size_t>(nb)]) continue;
            if (track_of[static_cast<size_t>(nb)] == track_of[static_cast<size_t>(v)]) return true;
        }
        // X-crossing scan restricted to edges with both endpoints placed
        for (const Edge& e : g.edges()) {
            if (e.u != v && e.v != v) continue;
            int other = e.u == v ? e.v : e.u;
            if (!placed[static_cast<size_t>(other)]) continue;
            for (const Edge& f : g.edges()) {
                if (!placed[static_cast<size_t>(f.u)] || !placed[static_cast<size_t>(f.v)])
                    continue;
                if (f == e) continue;
                int a = v, b2 = other, x = f.u, y = f.v;
                if (track_of[static_cast<size_t>(x)] == track_of[static_cast<size_t>(b2)] &&
                    track_of[static_cast<size_t>(y)] == track_of[static_cast<size_t>(a)])
                    std::swap(x, y);
                if (track_of[static_cast<size_t>(x)] != track_of[static_cast<size_t>(a)] ||
                    track_of[static_cast<size_t>(y)] != track_of[static_cast<size_t>(b2)])
                    continue;
                if (a == x || b2 == y) continue;
                bool first = pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(x)];
                bool second = pos[static_cast<size_t>(b2)] < pos[static_cast<size_t>(y)];
                if (first != second) return true;
            }
        }
        return false;
    };

    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == vertices.size()) return true;
        if (++nodes % 1024 == 0) deadline.check("has_3track_layout");
        int v = vertices[idx];
        int used = 0;
        for (const auto& track : layout.tracks)
            if (!track.empty()) ++used;
        for (int t = 0; t < 3; ++t) {
            if (t > used) break;  // track symmetry: first use of a new track is canonical
            size_t limit = layout.tracks[static_cast<size_t>(t)].size();
            for (size_t p = 0; p <= limit; ++p) {
                layout.tracks[static_cast<size_t>(t)].insert(
                    layout.tracks[static_cast<size_t>(t)].begin() + static_cast<long>(p), v);
                placed[static_cast<size_t>(v)] = 1;
                if (!creates_conflict(v) && self(self, idx + 1)) return true;
                placed[static_cast<size_t>(v)] = 0;
                layout.tracks[static_cast<size_t>(t)].erase(
                    layout.tracks[static_cast<size_t>(t)].begin() + static_cast<long>(p));
            }
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;
    Verdict check = verify_track_layout(g, layout);
    if (!check.ok())
        throw InternalAssertionError("has_3track_layout: witness failed verification",
                                     dump_document(to_json(g)));
    return layout;
}

}  // namespace lpwkit
