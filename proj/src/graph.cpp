#include "hunt/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "hunt/errors.hpp"

namespace hunt {

Graph::Graph(int n, std::vector<Edge> edges, std::optional<GridShape> grid)
    : n_(n), edges_(std::move(edges)), grid_(grid) {
    if (n_ < 0) throw InputError("negative vertex count");
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") out of range for " + std::to_string(n_) + " vertices");
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw InputError("duplicate edge (" + std::to_string(dup->u) + ", " +
                         std::to_string(dup->v) + ")");

    if (grid_) {
        if (grid_->rows < 1 || grid_->cols < 1 ||
            static_cast<long long>(grid_->rows) * grid_->cols != n_)
            throw InputError("grid shape does not match vertex count");
        long long expected = 2LL * grid_->rows * grid_->cols - grid_->rows - grid_->cols;
        if (static_cast<long long>(edges_.size()) != expected)
            throw InputError("edge count does not match grid shape");
        for (const auto& e : edges_) {
            auto a = coords(e.u);
            auto b = coords(e.v);
            if (std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1)
                throw InputError("edge joins non-adjacent grid cells");
        }
    }

    std::vector<std::size_t> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    targets_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        targets_[fill[e.u]++] = e.v;
        targets_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Cell Graph::coords(Vertex v) const {
    if (!grid_) throw InputError("graph has no grid coordinates");
    check_vertex(v);
    return {v / grid_->cols + 1, v % grid_->cols + 1};
}

Vertex Graph::vertex_at(int row, int col) const {
    if (!grid_) throw InputError("graph has no grid coordinates");
    if (row < 1 || row > grid_->rows || col < 1 || col > grid_->cols)
        throw InputError("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                         ") outside the grid");
    return (row - 1) * grid_->cols + (col - 1);
}

void Graph::check_vertex(Vertex v) const {
    if (!contains(v))
        throw InputError("vertex " + std::to_string(v) + " out of range for " +
                         std::to_string(n_) + " vertices");
}

void Graph::check_subset(const VertexSet& s) const {
    if (s.bound() > n_)
        throw InputError("vertex " + std::to_string(s.bound() - 1) + " out of range for " +
                         std::to_string(n_) + " vertices");
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    g.check_subset(s);
    VertexSet out;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v)) out.insert(w);
    return out -= s;
}

namespace {

struct Colouring {
    std::vector<int> colour;  // -1 unvisited
    std::vector<Vertex> parent;
    std::optional<Edge> conflict;
};

Colouring two_colour(const Graph& g) {
    Colouring c;
    c.colour.assign(g.order(), -1);
    c.parent.assign(g.order(), -1);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (c.colour[root] != -1) continue;
        c.colour[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (c.colour[w] == -1) {
                    c.colour[w] = 1 - c.colour[v];
                    c.parent[w] = v;
                    queue.push_back(w);
                } else if (c.colour[w] == c.colour[v] && !c.conflict) {
                    c.conflict = Edge{v, w};
                }
            }
        }
    }
    return c;
}

}  // namespace

Bipartition bipartition(const Graph& g) {
    auto c = two_colour(g);
    if (c.conflict) {
        // Tree paths from both endpoints to the BFS root, closed by the edge.
        std::vector<Vertex> up_u, up_v;
        for (Vertex x = c.conflict->u; x != -1; x = c.parent[x]) up_u.push_back(x);
        for (Vertex x = c.conflict->v; x != -1; x = c.parent[x]) up_v.push_back(x);
        std::vector<Vertex> walk = up_u;
        for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it) walk.push_back(*it);
        walk.push_back(c.conflict->u);
        std::string text;
        for (Vertex x : walk) text += (text.empty() ? "" : " ") + std::to_string(x);
        throw NotBipartiteError("graph is not bipartite; odd closed walk: " + text,
                                std::move(walk));
    }
    Bipartition b;
    for (Vertex v = 0; v < g.order(); ++v) (c.colour[v] == 0 ? b.part0 : b.part1).insert(v);
    return b;
}

bool is_bipartite(const Graph& g) { return !two_colour(g).conflict; }

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.edge_count() == static_cast<std::size_t>(g.order() - 1) &&
           is_connected(g);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    g.check_subset(keep);
    InducedSubgraph out;
    out.to_parent = keep.to_vector();
    std::vector<Vertex> local(g.order(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        local[out.to_parent[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v]});
    out.graph = Graph(static_cast<int>(out.to_parent.size()), std::move(edges));
    return out;
}

}  // namespace hunt
