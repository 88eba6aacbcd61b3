#include "lpwkit/stack_constructor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lpwkit/json_io.hpp"

namespace lpwkit {

namespace {

int positive_mod2(int x) { return ((x % 2) + 2) % 2; }

void require_valid(const Graph& g, const PathDecomposition& d, const Layering& l) {
    if (!verify_path_decomposition(g, d).ok() || !verify_layering(g, l).ok())
        throw PreconditionError("input is not a valid layered path decomposition");
}

}  // namespace

LeftNormalDecomposition left_normalize(const Graph& g, const PathDecomposition& d,
                                       const Layering& l) {
    require_valid(g, d, l);

    // Degenerate bags first: drop empties and consecutive duplicates.
    std::vector<std::vector<int>> bags;
    for (const auto& raw : d.bags) {
        std::vector<int> bag = raw;
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        if (bag.empty()) continue;
        if (!bags.empty() && bags.back() == bag) continue;
        bags.push_back(std::move(bag));
    }

    LeftNormalDecomposition out;
    out.first_bag.assign(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> previous;  // previous output bag

    for (const auto& bag : bags) {
        std::vector<int> fresh;
        std::vector<int> carry;  // previous ∩ bag
        for (int v : bag)
            (seen[static_cast<size_t>(v)] ? carry : fresh).push_back(v);
        // carry == bag ∩ previous holds for valid inputs (contiguity).
        if (fresh.empty()) {
            out.decomposition.bags.push_back(bag);
        } else {
            std::vector<int> current = carry;
            for (int v : fresh) {  // ascending id order: bags are sorted
                current.push_back(v);
                std::sort(current.begin(), current.end());
                out.decomposition.bags.push_back(current);
                out.first_bag[static_cast<size_t>(v)] =
                    static_cast<int>(out.decomposition.bags.size()) - 1;
                seen[static_cast<size_t>(v)] = 1;
            }
        }
        previous = bag;
    }
    (void)previous;
    return out;
}

SnakeOrder snake_order(const Graph& g, const LeftNormalDecomposition& lnd, const Layering& l) {
    if (l.weakness != 1)
        throw PreconditionError("snake_order: requires an ordinary (weakness-1) layering");
    if (l.levels.size() != static_cast<size_t>(g.vertex_count()))
        throw MalformedInputError("snake_order: layering does not cover the graph");

    SnakeOrder snake;
    snake.order.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) snake.order[static_cast<size_t>(v)] = v;
    std::sort(snake.order.begin(), snake.order.end(), [&](int v, int w) {
        int lv = l.level(v), lw = l.level(w);
        if (lv != lw) return lv < lw;
        bool ascending = positive_mod2(lv) == 0;
        return ascending ? lnd.before(v, w) : lnd.before(w, v);
    });
    return snake;
}

std::vector<int> layer_local_colouring(const Graph& g, const LeftNormalDecomposition& lnd,
                                       const Layering& l, int width) {
    // Per layer this is interval colouring of [first_bag, last_bag] intervals
    // in ≺_B order; the overlap at any point is at most |B_i ∩ L_j| <= width.
    std::vector<int> last_bag(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < lnd.decomposition.bags.size(); ++i)
        for (int v : lnd.decomposition.bags[i]) last_bag[static_cast<size_t>(v)] = static_cast<int>(i);

    std::map<int, std::vector<int>> layers;
    for (int v = 0; v < g.vertex_count(); ++v) layers[l.level(v)].push_back(v);

    std::vector<int> colour(static_cast<size_t>(g.vertex_count()), 0);
    for (auto& [level, members] : layers) {
        (void)level;
        std::sort(members.begin(), members.end(),
                  [&](int v, int w) { return lnd.before(v, w); });
        for (size_t i = 0; i < members.size(); ++i) {
            int v = members[i];
            std::set<int> used;
            for (size_t j = 0; j < i; ++j) {
                int w = members[j];
                // w's interval still open at v's first bag <=> they share a bag
                if (last_bag[static_cast<size_t>(w)] >=
                    lnd.first_bag[static_cast<size_t>(v)])
                    used.insert(colour[static_cast<size_t>(w)]);
            }
            int c = 1;
            while (used.count(c)) ++c;
            if (c > width)
                throw InternalAssertionError("greedy layer colouring exceeded the width bound",
                                             dump_document(to_json(g)));
            colour[static_cast<size_t>(v)] = c;
        }
    }
    return colour;
}

StackColour edge_stack_colour(const LeftNormalDecomposition& lnd, const Layering& l,
                              const std::vector<int>& vertex_colour, const Edge& e) {
    int left = e.u, right = e.v;
    if (!lnd.before(left, right)) std::swap(left, right);
    StackColour sc;
    sc.parity = positive_mod2(l.level(left));
    sc.slope = l.level(left) == l.level(right) + 1 ? 1 : 0;
    sc.colour = vertex_colour[static_cast<size_t>(left)];
    return sc;
}

StackLayout build_stack_layout(const Graph& g, const PathDecomposition& d, const Layering& l) {
    require_valid(g, d, l);
    if (l.weakness != 1)
        throw PreconditionError("build_stack_layout: requires an ordinary layering");

    LeftNormalDecomposition lnd = left_normalize(g, d, l);
    SnakeOrder snake = snake_order(g, lnd, l);

    StackLayout out;
    out.order = snake.order;
    out.stack_of_edge.assign(static_cast<size_t>(g.edge_count()), 0);
    if (g.edge_count() == 0) {
        out.stack_count = 0;
        return out;
    }

    int width = layered_width(lnd.decomposition, l);
    std::vector<int> colour = layer_local_colouring(g, lnd, l, width);

    // Stacks are the used (parity, slope, colour) triples, compacted to dense
    // ids in lexicographic triple order.
    std::map<StackColour, int> stack_ids;
    std::vector<StackColour> triples;
    triples.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        StackColour sc = edge_stack_colour(lnd, l, colour, e);
        stack_ids.emplace(sc, 0);
        triples.push_back(sc);
    }
    int next_id = 0;
    for (auto& [sc, id] : stack_ids) id = next_id++;
    for (size_t i = 0; i < triples.size(); ++i)
        out.stack_of_edge[i] = stack_ids[triples[i]];
    out.stack_count = next_id;

    Verdict check = verify_stack_layout(g, out);
    if (!check.ok())
        throw InternalAssertionError("constructed stack layout failed verification: " +
                                         check.violations.front().message,
                                     dump_document(to_json(g)));
    return out;
}

}  // namespace lpwkit
