#include "gmarkov/snakegraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gmarkov {

SnakeGraph snake_graph_build(const RegCF& cf) {
    SnakeGraph g;
    if (cf.terms.empty())
        return g;
    Int total(0);
    for (const Int& a : cf.terms) total += a;
    if (total == 1) { // the continued fraction [1]
        g.single_edge = true;
        return g;
    }
    if (!total.fits_slong_p())
        throw std::invalid_argument("snake_graph_build: continued fraction too large");
    long tiles = total.get_si() - 1;

    // Full sign word: a1 minuses, a2 pluses, ... with the two ends dropped.
    std::vector<int> s;
    int sgn = -1;
    for (const Int& a : cf.terms) {
        for (Int c = 0; c < a; ++c) s.push_back(sgn);
        sgn = -sgn;
    }
    s.erase(s.begin());
    s.pop_back();

    // Equal consecutive interior signs make the strip turn, unequal keep it
    // straight; the first move is right by convention (counts are invariant
    // under the reflection swapping the two choices).
    int x = 0, y = 0;
    g.tiles.push_back({x, y});
    bool move_right = true;
    for (long i = 1; i < tiles; ++i) {
        if (i >= 2 && s[static_cast<std::size_t>(i) - 2] == s[static_cast<std::size_t>(i) - 1])
            move_right = !move_right;
        if (move_right)
            ++x;
        else
            ++y;
        g.tiles.push_back({x, y});
    }
    return g;
}

Int brute_force_matchings(const SnakeGraph& g) {
    if (g.single_edge)
        return 1;
    if (g.tiles.empty())
        return 1;
    if (g.tiles.size() > 16)
        throw std::invalid_argument("brute_force_matchings: more than 16 tiles");

    // Collect vertices and unit edges of the tile union.
    std::map<std::pair<int, int>, int> vid;
    auto id_of = [&](int vx, int vy) {
        auto [it, inserted] = vid.insert({{vx, vy}, static_cast<int>(vid.size())});
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (auto [tx, ty] : g.tiles) {
        int v00 = id_of(tx, ty), v10 = id_of(tx + 1, ty);
        int v01 = id_of(tx, ty + 1), v11 = id_of(tx + 1, ty + 1);
        for (auto e : {std::pair{v00, v10}, {v00, v01}, {v10, v11}, {v01, v11}}) {
            if (e.first > e.second) std::swap(e.first, e.second);
            edges.push_back(e);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    int n = static_cast<int>(vid.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    std::vector<bool> used(static_cast<std::size_t>(n), false);
    long count = 0;
    auto rec = [&](auto&& self, int covered) -> void {
        if (covered == n) {
            ++count;
            return;
        }
        int u = 0;
        while (used[static_cast<std::size_t>(u)]) ++u;
        used[static_cast<std::size_t>(u)] = true;
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            self(self, covered + 2);
            used[static_cast<std::size_t>(v)] = false;
        }
        used[static_cast<std::size_t>(u)] = false;
    };
    rec(rec, 0);
    return Int(count);
}

} // namespace gmarkov
