#pragma once

#include <random>
#include <vector>

#include "hunt/graph.hpp"

namespace hunt {

using Rng = std::mt19937_64;

Graph make_grid(int rows, int cols);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_empty(int n);

// Spine path 0..leaves.size()-1; spine vertex i receives leaves[i] pendant
// vertices, numbered after the spine.
Graph make_caterpillar(const std::vector<int>& leaves);

// Centre 0 with `legs` paths of `length` vertices each hanging off it.
Graph make_spider(int legs, int length);

Graph disjoint_union(const Graph& a, const Graph& b);

// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Uniformly random recursive tree under a random labelling.
Graph random_tree(int n, Rng& rng);
// Random-length spine, leaves spread at random, then randomly relabelled.
Graph random_caterpillar(int n, Rng& rng);
// Random tree plus extra edges across its bipartition with probability p.
Graph random_connected_bipartite(int n, double p, Rng& rng);
Graph random_graph(int n, double p, Rng& rng);
// Random vertex deletions (at least one vertex survives) followed by random
// edge deletions, each with probability `drop`.
Graph random_subgraph(const Graph& g, double drop, Rng& rng);

}  // namespace hunt
