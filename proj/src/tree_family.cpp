#include "hunt/tree_family.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "hunt/errors.hpp"

namespace hunt {

std::vector<Vertex> RootedTree::children(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : graph.neighbors(v))
        if (parent[w] == v) out.push_back(w);
    return out;
}

std::uint64_t p_of_k(int k) {
    if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    return 2 * ((4 * kk - 3) * (kk - 1) + 1);
}

std::uint64_t predicted_tk_size(int k) {
    if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
    unsigned __int128 size = 3;
    for (int level = 2; level <= k; ++level) {
        unsigned __int128 p = p_of_k(level);
        size = 1 + p + p * p * size;
        if (size > std::numeric_limits<std::uint64_t>::max())
            throw ResourceError("|V(T_" + std::to_string(k) + ")| exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(size);
}

double log2_tk_size(int k) {
    if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
    // log2(1 + p + p^2 * 2^prev), kept in log space.
    double prev = std::log2(3.0);
    for (int level = 2; level <= k; ++level) {
        const double p = static_cast<double>(p_of_k(level));
        const double dominant = 2 * std::log2(p) + prev;
        prev = dominant + std::log2(1.0 + (1.0 + p) / std::exp2(dominant));
    }
    return prev;
}

namespace {

enum class Role { root, hub, leaf };

struct Pending {
    Vertex id;
    Role role;
    int level;
};

}  // namespace

RootedTree make_tk(int k, std::uint64_t cap) {
    if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
    std::uint64_t predicted;
    try {
        predicted = predicted_tk_size(k);
    } catch (const ResourceError&) {
        throw ResourceError("T_" + std::to_string(k) + " exceeds 64-bit vertex counts");
    }
    if (predicted > cap || predicted > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw ResourceError("T_" + std::to_string(k) + " would have " + std::to_string(predicted) +
                            " vertices, above the cap of " + std::to_string(cap));

    const int n = static_cast<int>(predicted);
    RootedTree t;
    t.k = k;
    t.root = 0;
    t.parent.assign(n, -1);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    Vertex next = 1;
    std::deque<Pending> queue{{0, Role::root, k}};
    auto attach = [&](const Pending& from, Role role, int level) {
        t.parent[next] = from.id;
        edges.push_back({from.id, next});
        queue.push_back({next, role, level});
        ++next;
    };
    while (!queue.empty()) {
        Pending cur = queue.front();
        queue.pop_front();
        switch (cur.role) {
            case Role::root:
                if (cur.level == 1) {
                    attach(cur, Role::leaf, 0);
                    attach(cur, Role::leaf, 0);
                } else {
                    for (std::uint64_t i = 0; i < p_of_k(cur.level); ++i) attach(cur, Role::hub, cur.level);
                }
                break;
            case Role::hub:
                for (std::uint64_t j = 0; j < p_of_k(cur.level); ++j) attach(cur, Role::root, cur.level - 1);
                break;
            case Role::leaf:
                break;
        }
    }
    if (next != n) throw ConstructionError("T_k vertex count disagrees with the recurrence");
    t.graph = Graph(n, std::move(edges));
    return t;
}

namespace {

std::pair<Vertex, int> farthest(const Graph& g, Vertex from) {
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    Vertex last = from;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        last = v;
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return {last, dist[last]};
}

}  // namespace

int tree_diameter(const Graph& t) {
    if (!is_tree(t)) throw InputError("diameter computation needs a tree");
    auto [end, unused] = farthest(t, 0);
    (void)unused;
    return farthest(t, end).second;
}

RootedTree subtree(const RootedTree& t, Vertex v) {
    t.graph.check_vertex(v);
    std::vector<Vertex> order{v};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex c : t.children(order[i])) order.push_back(c);
    std::vector<Vertex> local(t.graph.order(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<Vertex>(i);
    RootedTree out;
    out.root = 0;
    out.parent.assign(order.size(), -1);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < order.size(); ++i) {
        Vertex p = local[t.parent[order[i]]];
        out.parent[i] = p;
        edges.push_back({p, static_cast<Vertex>(i)});
    }
    out.graph = Graph(static_cast<int>(order.size()), std::move(edges));
    return out;
}

bool is_consistent(const RootedTree& t) {
    const int n = t.graph.order();
    if (!is_tree(t.graph) || static_cast<int>(t.parent.size()) != n || !t.graph.contains(t.root))
        return false;
    if (t.parent[t.root] != -1) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (v == t.root) continue;
        if (!t.graph.contains(t.parent[v]) || !t.graph.adjacent(v, t.parent[v])) return false;
    }
    // Every vertex must reach the root by parent links within n steps.
    for (Vertex v = 0; v < n; ++v) {
        Vertex x = v;
        for (int steps = 0; x != t.root; ++steps) {
            if (steps > n) return false;
            x = t.parent[x];
        }
    }
    return true;
}

}  // namespace hunt
