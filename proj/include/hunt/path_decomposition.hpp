#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hunt/graph.hpp"

namespace hunt {

struct PathDecomposition {
    std::vector<VertexSet> bags;

    // Largest bag size minus one; -1 for an empty decomposition.
    int width() const;
};

// Describes the first violated axiom (coverage, edge containment,
// contiguity) or returns nullopt for a valid decomposition of g.
std::optional<std::string> path_decomposition_defect(const Graph& g, const PathDecomposition& d);

// Throws InputError naming the defect.
void validate_path_decomposition(const Graph& g, const PathDecomposition& d);

// Recursive centroid splitting: decompose each component of t - c, order the
// pieces by their minimum vertex, concatenate and add c to every bag. Width is
// at most floor(log2 n). Centroid ties go to the lowest index.
PathDecomposition centroid_path_decomposition(const Graph& t);

}  // namespace hunt
