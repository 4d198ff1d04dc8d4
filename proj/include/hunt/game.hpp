#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hunt/graph.hpp"

namespace hunt {

// Finite hunters' strategy: volley i is fired in round i+1.
struct Strategy {
    int hunters = 1;
    std::vector<VertexSet> rounds;
    // Start set the strategy is claimed to win from; nullopt means V(G).
    std::optional<VertexSet> respect;

    VertexSet start_set(const Graph& g) const {
        return respect ? *respect : VertexSet::full(g.order());
    }

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

// Checks the hunter budget and that every referenced vertex exists in g.
void check_strategy(const Graph& g, const Strategy& s);

// One round of contamination: N(x \ h).
VertexSet phi(const Graph& g, const VertexSet& x, const VertexSet& h);

struct Trace {
    // X_0 .. X_len, X_t = phi(X_{t-1}, H_t).
    std::vector<VertexSet> states;
    // First t with X_t empty.
    std::optional<std::size_t> cleared_at;

    bool cleared() const noexcept { return cleared_at.has_value(); }
};

Trace run_strategy(const Graph& g, const Strategy& s);

// Same verdict as run_strategy(g, s).cleared() without keeping the states.
bool is_winning(const Graph& g, const Strategy& s);

// Turns a strategy that wins from part0 into one that wins from V(G):
// pad to odd length by repeating the last volley, then play it twice.
Strategy double_for_bipartite(const Strategy& s, const Bipartition& parts);

// Interactive game state. Contamination only changes through apply_volley.
class PlaySession {
public:
    PlaySession(std::shared_ptr<const Graph> graph, int budget);

    const Graph& graph() const noexcept { return *graph_; }
    int budget() const noexcept { return budget_; }
    const VertexSet& contamination() const noexcept { return contaminated_; }
    std::size_t round() const noexcept { return history_.size(); }
    const std::vector<VertexSet>& history() const noexcept { return history_; }
    bool won() const noexcept { return contaminated_.empty(); }

    // Fires one volley and returns won(). Over-budget or out-of-range volleys
    // throw InputError and leave the session untouched.
    bool apply_volley(const VertexSet& volley);

private:
    std::shared_ptr<const Graph> graph_;
    int budget_;
    VertexSet contaminated_;
    std::vector<VertexSet> history_;
};

}  // namespace hunt
