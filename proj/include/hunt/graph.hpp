#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hunt/vertex_set.hpp"

namespace hunt {

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct GridShape {
    int rows;
    int cols;
    friend bool operator==(const GridShape&, const GridShape&) = default;
};

// 1-based grid coordinates.
struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Immutable undirected simple graph on vertices 0..n-1, stored as CSR.
// Grids carry their shape; vertex (row, col) has index (row-1)*cols + (col-1).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges, std::optional<GridShape> grid = std::nullopt);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    // Edges with u < v, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    bool adjacent(Vertex u, Vertex v) const;

    const std::optional<GridShape>& grid() const noexcept { return grid_; }
    Cell coords(Vertex v) const;
    Vertex vertex_at(int row, int col) const;

    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }
    void check_vertex(Vertex v) const;
    void check_subset(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.grid_ == b.grid_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
    std::optional<GridShape> grid_;
};

struct Bipartition {
    VertexSet part0;
    VertexSet part1;
};

// N(S) = union of N(v) over v in S, minus S. |N(S)| is the vertex boundary.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// Two-colouring anchored so that the lowest vertex of every component lands
// in part0. Throws NotBipartiteError carrying an odd closed walk.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Connected components, sorted by minimum element.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // Local vertex i of graph is to_parent[i] in the original graph.
    std::vector<Vertex> to_parent;
};

// Induced subgraph on `keep`, renumbered in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace hunt
