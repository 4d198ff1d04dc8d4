#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check: contamination is recomputed from rabbit moves, the arena is solved
// backwards over every volley, and pyramidal sets are built from the
// definition.

#include <cstdint>
#include <set>
#include <vector>

#include "hunt/game.hpp"
#include "hunt/generators.hpp"
#include "hunt/graph.hpp"
#include "hunt/isoperimetry.hpp"

namespace hunt::testing {

// True iff some rabbit trajectory starting in `start` dodges every volley.
// Depth-first over (round, position), memoising dead pairs.
inline bool rabbit_escapes(const Graph& g, const std::vector<VertexSet>& rounds, const VertexSet& start) {
    const std::size_t len = rounds.size();
    std::vector<std::vector<char>> dead(len + 1, std::vector<char>(g.order(), 0));
    // A pair (t, v) means the rabbit sits on v before round t+1.
    auto survives = [&](auto&& self, std::size_t t, Vertex v) -> bool {
        if (t == len) return true;
        if (dead[t][v]) return false;
        if (!rounds[t].contains(v)) {
            for (Vertex w : g.neighbors(v))
                if (self(self, t + 1, w)) return true;
        }
        dead[t][v] = 1;
        return false;
    };
    for (Vertex v : start)
        if (survives(survives, 0, v)) return true;
    return false;
}

using Mask = std::uint64_t;

inline std::vector<Mask> neighbour_masks(const Graph& g) {
    std::vector<Mask> nb(g.order(), 0);
    for (const auto& e : g.edges()) {
        nb[e.u] |= Mask{1} << e.v;
        nb[e.v] |= Mask{1} << e.u;
    }
    return nb;
}

// Backward fixed point over all 2^n states and every volley of size <= k.
inline bool oracle_wins(const Graph& g, int k, Mask start) {
    const int n = g.order();
    const auto nb = neighbour_masks(g);
    const Mask states = Mask{1} << n;
    std::vector<Mask> volleys;
    for (Mask h = 0; h < states; ++h)
        if (std::popcount(h) <= k) volleys.push_back(h);
    std::vector<char> win(states, 0);
    win[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (Mask x = 1; x < states; ++x) {
            if (win[x]) continue;
            for (Mask h : volleys) {
                Mask y = 0;
                for (int v = 0; v < n; ++v)
                    if (((x >> v) & 1) && !((h >> v) & 1)) y |= nb[v];
                if (win[y]) {
                    win[x] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    return win[start];
}

inline int oracle_hunter_number(const Graph& g) {
    const Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
    for (int k = 1;; ++k)
        if (oracle_wins(g, k, all)) return k;
}

inline Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) m |= Mask{1} << v;
    return m;
}

// Random pyramidal set: pick random cells, then close downward along both
// diagonals (every member's two lower diagonal neighbours are added).
inline ClassSubset random_pyramidal(const ContextPtr& ctx, Rng& rng, double density) {
    const int n = ctx->n();
    std::bernoulli_distribution coin(density);
    std::set<Point> cells;
    for (int i = 0; i < ctx->class_size(); ++i)
        if (coin(rng)) cells.insert(ctx->point(i));
    for (int y = n; y >= 2; --y) {
        for (int x = 1; x <= n; ++x) {
            if (!cells.count({x, y})) continue;
            if (x >= 2) cells.insert({x - 1, y - 1});
            if (x <= n - 1) cells.insert({x + 1, y - 1});
        }
    }
    return {ctx, std::vector<Point>(cells.begin(), cells.end())};
}

inline ClassSubset random_subset(const ContextPtr& ctx, Rng& rng, double density) {
    std::bernoulli_distribution coin(density);
    ClassMask m = 0;
    for (int i = 0; i < ctx->class_size(); ++i)
        if (coin(rng)) m |= ClassMask{1} << i;
    return {ctx, m};
}

// Boundary size computed on the plain grid graph.
inline std::size_t grid_boundary(const ClassSubset& q) {
    Graph g = make_grid(q.context().n(), q.context().n());
    VertexSet out;
    for (Vertex v : q.to_grid_set())
        for (Vertex w : g.neighbors(v)) out.insert(w);
    return (out - q.to_grid_set()).size();
}

}  // namespace hunt::testing
