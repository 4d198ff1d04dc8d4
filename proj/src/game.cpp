#include "hunt/game.hpp"

#include <string>

#include "hunt/errors.hpp"

namespace hunt {

void check_strategy(const Graph& g, const Strategy& s) {
    if (s.hunters < 1) throw InputError("hunter budget must be positive");
    if (s.respect) g.check_subset(*s.respect);
    for (std::size_t i = 0; i < s.rounds.size(); ++i) {
        if (s.rounds[i].size() > static_cast<std::size_t>(s.hunters))
            throw InputError("round " + std::to_string(i + 1) + " fires " +
                             std::to_string(s.rounds[i].size()) + " shots with only " +
                             std::to_string(s.hunters) + " hunters");
        g.check_subset(s.rounds[i]);
    }
}

VertexSet phi(const Graph& g, const VertexSet& x, const VertexSet& h) {
    g.check_subset(x);
    g.check_subset(h);
    VertexSet out;
    for (Vertex v : x - h)
        for (Vertex w : g.neighbors(v)) out.insert(w);
    return out;
}

Trace run_strategy(const Graph& g, const Strategy& s) {
    check_strategy(g, s);
    Trace trace;
    trace.states.reserve(s.rounds.size() + 1);
    trace.states.push_back(s.start_set(g));
    if (trace.states.back().empty()) trace.cleared_at = 0;
    for (const auto& volley : s.rounds) {
        trace.states.push_back(phi(g, trace.states.back(), volley));
        if (!trace.cleared_at && trace.states.back().empty())
            trace.cleared_at = trace.states.size() - 1;
    }
    return trace;
}

bool is_winning(const Graph& g, const Strategy& s) {
    check_strategy(g, s);
    VertexSet x = s.start_set(g);
    for (const auto& volley : s.rounds) {
        if (x.empty()) return true;
        x = phi(g, x, volley);
    }
    return x.empty();
}

Strategy double_for_bipartite(const Strategy& s, const Bipartition& parts) {
    if (!s.respect || *s.respect != parts.part0)
        throw PreconditionError("doubling needs a strategy declared winning from part0");
    Strategy out;
    out.hunters = s.hunters;
    auto once = s.rounds;
    if (once.size() % 2 == 0 && !once.empty()) once.push_back(once.back());
    out.rounds = once;
    out.rounds.insert(out.rounds.end(), once.begin(), once.end());
    return out;
}

PlaySession::PlaySession(std::shared_ptr<const Graph> graph, int budget)
    : graph_(std::move(graph)), budget_(budget) {
    if (!graph_) throw InputError("play session needs a graph");
    if (budget_ < 1) throw InputError("hunter budget must be positive");
    contaminated_ = VertexSet::full(graph_->order());
}

bool PlaySession::apply_volley(const VertexSet& volley) {
    if (volley.size() > static_cast<std::size_t>(budget_))
        throw InputError("volley of " + std::to_string(volley.size()) + " shots exceeds budget " +
                         std::to_string(budget_));
    auto next = phi(*graph_, contaminated_, volley);
    history_.push_back(volley);
    contaminated_ = std::move(next);
    return won();
}

}  // namespace hunt
