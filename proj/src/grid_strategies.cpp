#include "hunt/grid_strategies.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hunt/errors.hpp"
#include "hunt/generators.hpp"

namespace hunt {

GridSweepPlan grid_sweep_plan(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
    const Graph grid = make_grid(rows, cols);
    const bool transposed = rows > cols;
    const int short_side = std::min(rows, cols);
    const int long_side = std::max(rows, cols);
    const int swept = short_side % 2 == 1 ? short_side : short_side + 1;

    // Shot at sweep column `col` (1..long_side), sweep row `row` (1..swept).
    auto shoot = [&](VertexSet& volley, int col, int row) {
        if (row > short_side) return;  // phantom row
        volley.insert(transposed ? grid.vertex_at(col, row) : grid.vertex_at(row, col));
    };
    auto rows_of = [&](VertexSet& volley, int col, int first, int last) {
        for (int r = first; r <= std::min(last, swept); r += 2) shoot(volley, col, r);
    };

    GridSweepPlan plan;
    plan.rows = rows;
    plan.cols = cols;
    plan.hunters = (swept + 1) / 2;
    auto& rounds = plan.strategy.rounds;
    for (int i = 1; i < long_side; ++i) {
        VertexSet opening;
        rows_of(opening, i, 1, swept);
        rounds.push_back(std::move(opening));
        for (int j = 1; j <= (swept + 1) / 2; ++j) {
            VertexSet odd_step;
            rows_of(odd_step, i + 1, 1, 2 * j - 1);
            rows_of(odd_step, i, 2 * j, swept - 1);
            rounds.push_back(std::move(odd_step));
            VertexSet even_step;
            rows_of(even_step, i + 1, 2, 2 * j);
            rows_of(even_step, i, 2 * j + 1, swept);
            rounds.push_back(std::move(even_step));
        }
    }
    VertexSet closing;
    rows_of(closing, long_side, 1, swept);
    rounds.push_back(std::move(closing));

    plan.strategy.hunters = plan.hunters;
    plan.strategy.respect = bipartition(grid).part0;
    if (!is_winning(grid, plan.strategy))
        throw ConstructionError("grid sweep for " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " failed verification");
    return plan;
}

Strategy grid_hunter_strategy(int rows, int cols) { return grid_sweep_plan(rows, cols).strategy; }

Strategy pw_strategy(const Graph& g, const PathDecomposition& d) {
    validate_path_decomposition(g, d);
    Strategy s;
    s.hunters = std::max(1, d.width() + 1);
    s.rounds = d.bags;
    return s;
}

GridLowerBoundReport check_grid_lb_invariant(int n, const Strategy& s, const Trace& trace) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("lower-bound invariant needs an even n >= 4");
    if (s.hunters > n / 2)
        throw PreconditionError("lower-bound invariant needs at most n/2 = " + std::to_string(n / 2) +
                                " hunters, strategy has " + std::to_string(s.hunters));
    if (s.respect) throw PreconditionError("lower-bound invariant needs a strategy started from all vertices");
    if (trace.states.size() != s.rounds.size() + 1)
        throw InputError("trace length does not match the strategy");
    const VertexSet all = VertexSet::full(n * n);
    if (trace.states.front() != all) throw InputError("trace does not start from the full n x n grid");

    VertexSet even_class;
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col)
            if ((row + col) % 2 == 0) even_class.insert((row - 1) * n + (col - 1));

    GridLowerBoundReport report;
    report.min_even_class = report.min_odd_class = std::numeric_limits<std::size_t>::max();
    const std::size_t floor_value = static_cast<std::size_t>(n) * n / 4;
    for (std::size_t t = 0; t < trace.states.size(); ++t) {
        const auto& x = trace.states[t];
        if (x.bound() > n * n) throw InputError("trace state outside the n x n grid");
        std::size_t even = (x & even_class).size();
        std::size_t odd = x.size() - even;
        report.min_even_class = std::min(report.min_even_class, even);
        report.min_odd_class = std::min(report.min_odd_class, odd);
        if (t > 0 && (even < floor_value || odd < floor_value) && !report.first_violation) {
            report.holds = false;
            report.first_violation = t;
        }
    }
    return report;
}

}  // namespace hunt
