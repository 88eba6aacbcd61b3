#include "lpwkit/generators.hpp"

#include <algorithm>
#include <numeric>

#include "lpwkit/rng.hpp"
#include "lpwkit/track_decomposer.hpp"

namespace lpwkit {

GridResult gen_grid(int n, bool diagonals) {
    if (n < 1) throw PreconditionError("gen_grid: n must be >= 1");
    auto id = [n](int r, int c) { return r * n + c; };

    std::vector<Edge> edges;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < n) edges.emplace_back(id(r, c), id(r + 1, c));
            if (diagonals && r + 1 < n && c + 1 < n)
                edges.emplace_back(id(r, c), id(r + 1, c + 1));
        }
    }
    GridResult out{Graph(n * n, std::move(edges)), {}};

    // Bags: consecutive column pairs; layers: rows.
    PathDecomposition d;
    if (n == 1) {
        d.bags.push_back({0});
    } else {
        for (int c = 0; c + 1 < n; ++c) {
            std::vector<int> bag;
            for (int r = 0; r < n; ++r) {
                bag.push_back(id(r, c));
                bag.push_back(id(r, c + 1));
            }
            std::sort(bag.begin(), bag.end());
            d.bags.push_back(std::move(bag));
        }
    }
    Layering l;
    l.weakness = 1;
    l.levels.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) l.levels[static_cast<size_t>(id(r, c))] = r;

    out.decomposition.decomposition = std::move(d);
    out.decomposition.layering = std::move(l);
    out.decomposition.layered_width =
        layered_width(out.decomposition.decomposition, out.decomposition.layering);
    return out;
}

CaterpillarResult gen_caterpillar(int spine, int legs) {
    if (spine < 1 || legs < 0) throw PreconditionError("gen_caterpillar: bad parameters");
    // ids: spine vertices 0..spine-1, then leaves grouped by spine vertex.
    int n = spine + spine * legs;
    std::vector<Edge> edges;
    auto leaf = [&](int s, int j) { return spine + s * legs + j; };
    for (int s = 0; s + 1 < spine; ++s) edges.emplace_back(s, s + 1);
    for (int s = 0; s < spine; ++s)
        for (int j = 0; j < legs; ++j) edges.emplace_back(s, leaf(s, j));

    // Odd spine positions and leaves of even spine positions on track 0, the
    // rest on track 1, everything ordered left-to-right along the spine.
    TrackLayout t;
    t.tracks.assign(2, {});
    for (int s = 0; s < spine; ++s) {
        int spine_track = (s % 2 == 1) ? 0 : 1;
        t.tracks[static_cast<size_t>(spine_track)].push_back(s);
        for (int j = 0; j < legs; ++j)
            t.tracks[static_cast<size_t>(1 - spine_track)].push_back(leaf(s, j));
    }
    return {Graph(n, std::move(edges)), std::move(t)};
}

Graph gen_tree_plus_apex(int depth) {
    if (depth < 0) throw PreconditionError("gen_tree_plus_apex: depth must be >= 0");
    int tree_size = (1 << (depth + 1)) - 1;
    int apex = tree_size;
    std::vector<Edge> edges;
    for (int v = 1; v < tree_size; ++v) edges.emplace_back(v, (v - 1) / 2);
    for (int v = 0; v < tree_size; ++v) edges.emplace_back(v, apex);
    return Graph(tree_size + 1, std::move(edges));
}

Random3TrackResult gen_random_3track(int n1, int n2, int n3, double density, uint64_t seed,
                                     bool connected) {
    if (n1 < 0 || n2 < 0 || n3 < 0)
        throw PreconditionError("gen_random_3track: negative track size");
    if (density < 0.0 || density > 1.0)
        throw PreconditionError("gen_random_3track: density must be in [0,1]");

    int n = n1 + n2 + n3;
    TrackLayout t;
    t.tracks.assign(3, {});
    int next = 0;
    for (int i = 0; i < n1; ++i) t.tracks[0].push_back(next++);
    for (int i = 0; i < n2; ++i) t.tracks[1].push_back(next++);
    for (int i = 0; i < n3; ++i) t.tracks[2].push_back(next++);

    Graph empty(n, {});
    SaturatedTrackLayout sat = saturate(empty, t);

    Rng rng(seed);
    std::vector<Edge> kept;
    std::vector<Edge> dropped;
    for (const Edge& e : sat.added_edges)
        (rng.unit() < density ? kept : dropped).push_back(e);

    if (connected && density > 0.0) {
        // Re-add saturation edges (in their deterministic order) that merge
        // components until the kept subgraph spans one component.
        std::vector<int> parent(static_cast<size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<size_t>(v)] != v) {
                parent[static_cast<size_t>(v)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
                v = parent[static_cast<size_t>(v)];
            }
            return v;
        };
        auto unite = [&](int a, int b) {
            a = find(a), b = find(b);
            if (a == b) return false;
            parent[static_cast<size_t>(a)] = b;
            return true;
        };
        for (const Edge& e : kept) unite(e.u, e.v);
        for (const Edge& e : sat.added_edges) {
            if (std::find(kept.begin(), kept.end(), e) != kept.end()) continue;
            if (unite(e.u, e.v)) kept.push_back(e);
        }
    }
    std::sort(kept.begin(), kept.end());
    return {Graph(n, std::move(kept)), std::move(t)};
}

namespace {

void triangulate_fan(int lo, int hi, Rng& rng, std::vector<Edge>& chords) {
    // polygon vertices lo..hi (in cycle order); add chords of a random triangulation
    if (hi - lo < 2) return;
    // pick the apex of the triangle sitting on edge (lo, hi)
    int k = lo + 1 + static_cast<int>(rng.below(static_cast<uint64_t>(hi - lo - 1)));
    if (k - lo > 1) chords.emplace_back(lo, k);
    if (hi - k > 1) chords.emplace_back(k, hi);
    triangulate_fan(lo, k, rng, chords);
    triangulate_fan(k, hi, rng, chords);
}

}  // namespace

Graph gen_outerplanar(int n, uint64_t seed) {
    if (n < 3) throw PreconditionError("gen_outerplanar: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    Rng rng(seed);
    triangulate_fan(0, n - 1, rng, edges);
    return Graph(n, std::move(edges));
}

}  // namespace lpwkit
