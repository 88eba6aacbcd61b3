#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "lpwkit/graph_core.hpp"
#include "lpwkit/rng.hpp"

namespace lpwkit::testutil {

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

inline Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Random layering with |Δℓ| <= s: BFS per component, each vertex drawn from
// the window its assigned neighbours allow.  Random draws can paint the walk
// into a corner (empty window); fall back to the always-valid BFS-distance
// layering scaled by s.
inline Layering random_layering(const Graph& g, int s, Rng& rng) {
    Layering l;
    l.weakness = s;
    l.levels.assign(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> state(static_cast<size_t>(g.vertex_count()), 0);  // 0 new, 1 assigned
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (state[static_cast<size_t>(root)]) continue;
        state[static_cast<size_t>(root)] = 1;
        l.levels[static_cast<size_t>(root)] = static_cast<int>(rng.below(3));
        std::vector<int> queue{root};
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int nb : g.neighbours(queue[head])) {
                if (state[static_cast<size_t>(nb)]) continue;
                long lo = std::numeric_limits<int>::min(), hi = std::numeric_limits<int>::max();
                for (int nb2 : g.neighbours(nb))
                    if (state[static_cast<size_t>(nb2)]) {
                        lo = std::max(lo, static_cast<long>(l.levels[static_cast<size_t>(nb2)]) - s);
                        hi = std::min(hi, static_cast<long>(l.levels[static_cast<size_t>(nb2)]) + s);
                    }
                if (hi < lo) {
                    // dead end: use distances from this component's root instead
                    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
                    std::vector<int> bfs{root};
                    dist[static_cast<size_t>(root)] = 0;
                    for (size_t h2 = 0; h2 < bfs.size(); ++h2)
                        for (int x : g.neighbours(bfs[h2]))
                            if (dist[static_cast<size_t>(x)] < 0) {
                                dist[static_cast<size_t>(x)] = dist[static_cast<size_t>(bfs[h2])] + 1;
                                bfs.push_back(x);
                            }
                    for (int x : bfs) {
                        l.levels[static_cast<size_t>(x)] = dist[static_cast<size_t>(x)] * s;
                        state[static_cast<size_t>(x)] = 1;
                    }
                    queue.clear();
                    break;
                }
                l.levels[static_cast<size_t>(nb)] =
                    static_cast<int>(lo + static_cast<long>(rng.below(static_cast<uint64_t>(hi - lo + 1))));
                state[static_cast<size_t>(nb)] = 1;
                queue.push_back(nb);
            }
        }
    }
    return l;
}

// Valid path decomposition from a random vertex order: bag_t = {v_t} plus the
// earlier vertices that still have a neighbour at or after v_t.
inline PathDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    PathDecomposition d;
    std::vector<char> placed(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t t = 0; t < order.size(); ++t) {
        int v = order[t];
        std::vector<int> bag{v};
        for (size_t i = 0; i < t; ++i) {
            int u = order[i];
            for (int nb : g.neighbours(u))
                if (!placed[static_cast<size_t>(nb)]) {  // v itself is not yet placed
                    bag.push_back(u);
                    break;
                }
        }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        d.bags.push_back(std::move(bag));
        placed[static_cast<size_t>(v)] = 1;
    }
    return d;
}

inline PathDecomposition random_decomposition(const Graph& g, Rng& rng) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    return decomposition_from_order(g, order);
}

inline int component_count(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> gone(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : removed) gone[static_cast<size_t>(v)] = 1;
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (gone[static_cast<size_t>(v)] || comp[static_cast<size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<size_t>(v)] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int nb : g.neighbours(u))
                if (!gone[static_cast<size_t>(nb)] && comp[static_cast<size_t>(nb)] < 0) {
                    comp[static_cast<size_t>(nb)] = count;
                    stack.push_back(nb);
                }
        }
        ++count;
    }
    return count;
}

}  // namespace lpwkit::testutil
