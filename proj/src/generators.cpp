#include "hunt/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hunt/errors.hpp"

namespace hunt {

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw InputError("grid dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    std::vector<Edge> edges;
    edges.reserve(2 * static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) edges.push_back({v, v + 1});
            if (r + 1 < rows) edges.push_back({v, v + cols});
        }
    }
    return Graph(rows * cols, std::move(edges), GridShape{rows, cols});
}

Graph make_path(int n) {
    if (n < 1) throw InputError("path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw InputError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph make_empty(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return Graph(n, {});
}

Graph make_caterpillar(const std::vector<int>& leaves) {
    if (leaves.empty()) throw InputError("caterpillar needs a non-empty spine");
    int spine = static_cast<int>(leaves.size());
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < spine; ++v) edges.push_back({v, v + 1});
    int next = spine;
    for (int i = 0; i < spine; ++i) {
        if (leaves[i] < 0) throw InputError("negative leaf count");
        for (int j = 0; j < leaves[i]; ++j) edges.push_back({i, next++});
    }
    return Graph(next, std::move(edges));
}

Graph make_spider(int legs, int length) {
    if (legs < 0 || length < 0) throw InputError("spider parameters must be non-negative");
    std::vector<Edge> edges;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int i = 0; i < length; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
    }
    return Graph(next, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
    return Graph(a.order() + b.order(), std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw InputError("permutation size mismatch");
    std::vector<bool> hit(g.order(), false);
    for (Vertex p : perm) {
        if (!g.contains(p) || hit[p]) throw InputError("relabelling is not a permutation");
        hit[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.order(), std::move(edges));
}

namespace {

std::vector<Vertex> random_permutation(int n, Rng& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw InputError("tree needs at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int v = 1; v < n; ++v) edges.push_back({uniform(rng, 0, v - 1), v});
    return relabel(Graph(n, std::move(edges)), random_permutation(n, rng));
}

Graph random_caterpillar(int n, Rng& rng) {
    if (n < 1) throw InputError("caterpillar needs at least one vertex");
    int spine = uniform(rng, 1, n);
    std::vector<int> leaves(spine, 0);
    for (int i = spine; i < n; ++i) ++leaves[uniform(rng, 0, spine - 1)];
    return relabel(make_caterpillar(leaves), random_permutation(n, rng));
}

Graph random_connected_bipartite(int n, double p, Rng& rng) {
    Graph tree = random_tree(n, rng);
    auto parts = bipartition(tree);
    std::vector<Edge> edges = tree.edges();
    std::bernoulli_distribution coin(p);
    for (Vertex u : parts.part0)
        for (Vertex v : parts.part1)
            if (!tree.adjacent(u, v) && coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph random_graph(int n, double p, Rng& rng) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph random_subgraph(const Graph& g, double drop, Rng& rng) {
    if (g.order() < 1) throw InputError("cannot sample a subgraph of the empty graph");
    std::bernoulli_distribution coin(drop);
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!coin(rng)) keep.insert(v);
    if (keep.empty()) keep.insert(uniform(rng, 0, g.order() - 1));
    auto sub = induced_subgraph(g, keep);
    std::vector<Edge> edges;
    for (const auto& e : sub.graph.edges())
        if (!coin(rng)) edges.push_back(e);
    return Graph(sub.graph.order(), std::move(edges));
}

}  // namespace hunt
