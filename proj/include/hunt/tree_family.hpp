#pragma once

#include <cstdint>
#include <vector>

#include "hunt/graph.hpp"

namespace hunt {

struct RootedTree {
    Graph graph;
    Vertex root = 0;
    // parent[root] == -1
    std::vector<Vertex> parent;
    // Family index when built by make_tk, 0 otherwise.
    int k = 0;

    std::vector<Vertex> children(Vertex v) const;
};

// Branching of the k-th tree: 2 * ((4k - 3)(k - 1) + 1).
std::uint64_t p_of_k(int k);

// |V(T_k)| from the recurrence |T_k| = 1 + p + p^2 |T_{k-1}|, |T_1| = 3.
// Throws ResourceError when the value does not fit in 64 bits.
std::uint64_t predicted_tk_size(int k);
// log2 |V(T_k)|, usable far beyond the 64-bit range.
double log2_tk_size(int k);

inline constexpr std::uint64_t default_tk_cap = 10'000'000;

// T_1 is a three-vertex path rooted at its middle. T_k has a root with p(k)
// children, each carrying p(k) copies of T_{k-1} hung from their roots.
// Vertices are numbered breadth-first from the root (root = 0), children in
// construction order. Throws ResourceError when the size would exceed cap.
RootedTree make_tk(int k, std::uint64_t cap = default_tk_cap);

// Longest shortest path, by two breadth-first sweeps. Needs a tree.
int tree_diameter(const Graph& t);
inline int tree_diameter(const RootedTree& t) { return tree_diameter(t.graph); }

// The subtree hanging from v, renumbered breadth-first with v as root.
RootedTree subtree(const RootedTree& t, Vertex v);

// Checks that `parent` describes g as a tree rooted at `root`.
bool is_consistent(const RootedTree& t);

}  // namespace hunt
