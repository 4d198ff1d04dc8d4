#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hunt/game.hpp"
#include "hunt/generators.hpp"
#include "hunt/graph.hpp"

namespace hunt {

struct SolverConfig {
    std::uint64_t max_states = std::uint64_t{1} << 24;
    // Drop discovered states that contain an already discovered state.
    bool antichain_pruning = true;
    // Expand frontier blocks on worker threads; results are merged in
    // sequential order, so the outcome never depends on this flag.
    bool parallel = false;
};

struct SolveOutcome {
    bool winnable = false;
    // Present iff winnable. Declares `start` as its respect set.
    std::optional<Strategy> witness;
    std::uint64_t explored_states = 0;
    std::uint64_t frontier_peak = 0;
};

// Largest graph wins_with_k accepts; states are 64-bit masks.
inline constexpr int max_solver_vertices = 64;

// Breadth-first search of the arena from `start`. Only volleys H subset of X
// with |H| = min(k, |X|) are expanded, in lexicographic order; the first
// path to the empty state becomes the witness. Throws ResourceError when
// more than cfg.max_states states would be discovered.
SolveOutcome wins_with_k(const Graph& g, int k, const VertexSet& start, const SolverConfig& cfg = {});

// Exhaustion record for a budget that loses on one component.
struct Certificate {
    int component = 0;
    int k = 0;
    std::uint64_t explored_states = 0;
    std::uint64_t frontier_peak = 0;
};

struct HunterNumberResult {
    int hunters = 0;
    // Winning from V(G) with `hunters` hunters; components are cleared in turn.
    Strategy witness;
    std::vector<Certificate> certificates;
    // Hunter number of each component, in components() order.
    std::vector<int> per_component;
};

// Exact hunter number, maximised over components. Bipartite components are
// solved from part0 and the witness doubled. Throws ResourceError whose
// undecided_k() is the smallest budget the search could not settle.
HunterNumberResult hunter_number(const Graph& g, const SolverConfig& cfg = {});

struct MonotonicityViolation {
    Graph subgraph;
    int sub_hunters;
    int super_hunters;
};

struct MonotonicityReport {
    int trials = 0;
    int super_hunters = 0;
    std::vector<MonotonicityViolation> violations;
};

// Samples random subgraphs g1 of g2 and checks h(g1) <= h(g2).
MonotonicityReport subgraph_monotonicity_check(const Graph& g2, int trials, Rng& rng,
                                               const SolverConfig& cfg = {});

}  // namespace hunt
