#pragma once

#include <cstddef>
#include <optional>

#include "hunt/game.hpp"
#include "hunt/path_decomposition.hpp"

namespace hunt {

struct GridSweepPlan {
    int rows = 0;
    int cols = 0;
    int hunters = 0;
    // Wins from the even-coordinate-sum class of make_grid(rows, cols).
    Strategy strategy;
};

// Column-by-column sweep with floor(min(rows, cols)/2)+1 hunters. The sweep
// runs along the longer side; an even short side is handled by sweeping one
// extra phantom row and dropping its shots. The plan is engine-verified
// before it is returned (ConstructionError otherwise).
GridSweepPlan grid_sweep_plan(int rows, int cols);

// grid_sweep_plan(rows, cols).strategy
Strategy grid_hunter_strategy(int rows, int cols);

// Plays the bags in order with width+1 hunters from all of V(G).
Strategy pw_strategy(const Graph& g, const PathDecomposition& d);

struct GridLowerBoundReport {
    bool holds = true;
    // First round t >= 1 where either colour class drops below n*n/4.
    std::optional<std::size_t> first_violation;
    std::size_t min_even_class = 0;
    std::size_t min_odd_class = 0;
};

// On the n x n grid (n even, n >= 4) and any strategy with at most n/2
// hunters started from all vertices, both colour classes keep at least
// n*n/4 contaminated vertices after every round. Checks that claim on a
// trace of such a strategy.
GridLowerBoundReport check_grid_lb_invariant(int n, const Strategy& s, const Trace& trace);

}  // namespace hunt
