#include "hunt/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <unordered_map>

#include "hunt/errors.hpp"

namespace hunt {

namespace {

using Mask = std::uint64_t;

struct Node {
    Mask state;
    std::uint32_t parent;
    Mask volley;  // volley that led here from parent
};

struct Successor {
    Mask state;
    Mask volley;
};

constexpr std::size_t block_size = 4096;

class ArenaSearch {
public:
    ArenaSearch(const Graph& g, int k, const SolverConfig& cfg) : k_(k), cfg_(cfg) {
        neighbours_.resize(g.order(), 0);
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex w : g.neighbors(v)) neighbours_[v] |= Mask{1} << w;
    }

    SolveOutcome run(Mask start) {
        SolveOutcome out;
        add_node({start, 0, 0});
        if (start == 0) {
            out.winnable = true;
            out.explored_states = nodes_.size();
            out.frontier_peak = 1;
            witness_end_ = 0;
            return out;
        }
        std::vector<std::uint32_t> frontier{0};
        while (!frontier.empty()) {
            out.frontier_peak = std::max<std::uint64_t>(out.frontier_peak, frontier.size());
            std::vector<std::uint32_t> next;
            for (std::size_t lo = 0; lo < frontier.size(); lo += block_size) {
                std::size_t hi = std::min(frontier.size(), lo + block_size);
                auto expanded = expand_block(frontier, lo, hi);
                for (std::size_t i = lo; i < hi; ++i) {
                    for (const auto& s : expanded[i - lo]) {
                        if (s.state == 0) {
                            add_node({0, frontier[i], s.volley});
                            witness_end_ = static_cast<std::uint32_t>(nodes_.size() - 1);
                            out.winnable = true;
                            out.explored_states = nodes_.size();
                            return out;
                        }
                        if (dominated(s.state)) continue;
                        if (nodes_.size() >= cfg_.max_states)
                            throw ResourceError("state cap of " + std::to_string(cfg_.max_states) +
                                                    " reached with k=" + std::to_string(k_),
                                                nodes_.size(), k_);
                        add_node({s.state, frontier[i], s.volley});
                        next.push_back(static_cast<std::uint32_t>(nodes_.size() - 1));
                    }
                }
            }
            frontier = std::move(next);
        }
        out.explored_states = nodes_.size();
        return out;
    }

    std::vector<Mask> witness_volleys() const {
        std::vector<Mask> volleys;
        for (auto i = witness_end_; i != 0; i = nodes_[i].parent) volleys.push_back(nodes_[i].volley);
        std::reverse(volleys.begin(), volleys.end());
        return volleys;
    }

private:
    void add_node(Node n) {
        index_.emplace(n.state, static_cast<std::uint32_t>(nodes_.size()));
        nodes_.push_back(n);
        if (cfg_.antichain_pruning) by_size_[std::popcount(n.state)].push_back(n.state);
    }

    bool dominated(Mask state) const {
        if (index_.count(state)) return true;
        if (!cfg_.antichain_pruning) return false;
        const int bits = std::popcount(state);
        std::size_t candidates = 0;
        for (int c = 0; c < bits; ++c) candidates += by_size_[c].size();
        if (bits < 24 && (std::size_t{1} << bits) < candidates) {
            // Walk the proper submasks of state.
            for (Mask sub = (state - 1) & state;; sub = (sub - 1) & state) {
                if (index_.count(sub)) return true;
                if (sub == 0) break;
            }
            return false;
        }
        for (int c = 0; c < bits; ++c)
            for (Mask d : by_size_[c])
                if ((d & ~state) == 0) return true;
        return false;
    }

    void successors(Mask x, std::vector<Successor>& out) const {
        out.clear();
        int bits[64];
        int count = 0;
        for (Mask rest = x; rest; rest &= rest - 1) bits[count++] = std::countr_zero(rest);
        const int c = std::min(k_, count);
        int pick[64];
        for (int i = 0; i < c; ++i) pick[i] = i;
        while (true) {
            Mask volley = 0;
            for (int i = 0; i < c; ++i) volley |= Mask{1} << bits[pick[i]];
            Mask y = 0;
            for (Mask rest = x & ~volley; rest; rest &= rest - 1) y |= neighbours_[std::countr_zero(rest)];
            if (y != x) out.push_back({y, volley});
            // Next combination in lexicographic order.
            int i = c - 1;
            while (i >= 0 && pick[i] == count - c + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    std::vector<std::vector<Successor>> expand_block(const std::vector<std::uint32_t>& frontier,
                                                     std::size_t lo, std::size_t hi) const {
        std::vector<std::vector<Successor>> result(hi - lo);
        auto work = [&](std::size_t from, std::size_t to) {
            for (std::size_t i = from; i < to; ++i) successors(nodes_[frontier[i]].state, result[i - lo]);
        };
        unsigned threads = cfg_.parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
        if (threads <= 1 || hi - lo < 64) {
            work(lo, hi);
            return result;
        }
        std::vector<std::thread> pool;
        std::size_t chunk = (hi - lo + threads - 1) / threads;
        for (std::size_t from = lo; from < hi; from += chunk)
            pool.emplace_back(work, from, std::min(hi, from + chunk));
        for (auto& t : pool) t.join();
        return result;
    }

    int k_;
    const SolverConfig& cfg_;
    std::vector<Mask> neighbours_;
    std::vector<Node> nodes_;
    std::unordered_map<Mask, std::uint32_t> index_;
    std::vector<Mask> by_size_[65];
    std::uint32_t witness_end_ = 0;
};

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) m |= Mask{1} << v;
    return m;
}

VertexSet from_mask(Mask m) {
    VertexSet s;
    for (; m; m &= m - 1) s.insert(std::countr_zero(m));
    return s;
}

}  // namespace

SolveOutcome wins_with_k(const Graph& g, int k, const VertexSet& start, const SolverConfig& cfg) {
    if (k < 1) throw InputError("hunter budget must be positive");
    if (cfg.max_states < 1) throw InputError("max_states must be at least 1");
    g.check_subset(start);
    if (g.order() > max_solver_vertices)
        throw ResourceError("exact solver handles at most " + std::to_string(max_solver_vertices) +
                                " vertices per component, got " + std::to_string(g.order()),
                            0, k);
    ArenaSearch search(g, k, cfg);
    auto out = search.run(to_mask(start));
    if (out.winnable) {
        Strategy w;
        w.hunters = k;
        for (Mask volley : search.witness_volleys()) w.rounds.push_back(from_mask(volley));
        if (start != VertexSet::full(g.order())) w.respect = start;
        out.witness = std::move(w);
    }
    return out;
}

HunterNumberResult hunter_number(const Graph& g, const SolverConfig& cfg) {
    if (g.order() < 1) throw InputError("hunter number of the empty graph is undefined");
    HunterNumberResult result;
    result.witness.hunters = 1;
    const auto comps = components(g);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        auto sub = induced_subgraph(g, comps[ci]);
        if (sub.graph.order() > max_solver_vertices)
            throw ResourceError("component " + std::to_string(ci) + " has " +
                                    std::to_string(sub.graph.order()) +
                                    " vertices, beyond the exact solver",
                                0, 1);
        std::optional<Bipartition> parts;
        if (is_bipartite(sub.graph)) parts = bipartition(sub.graph);
        const VertexSet start = parts ? parts->part0 : VertexSet::full(sub.graph.order());

        for (int k = 1;; ++k) {
            SolveOutcome outcome;
            try {
                outcome = wins_with_k(sub.graph, k, start, cfg);
            } catch (const ResourceError& e) {
                throw ResourceError(e.what(), e.explored_states(), k);
            }
            if (!outcome.winnable) {
                result.certificates.push_back(
                    {static_cast<int>(ci), k, outcome.explored_states, outcome.frontier_peak});
                continue;
            }
            Strategy local = *outcome.witness;
            if (parts) {
                // A single-vertex component has part0 = V, so the witness
                // leaves its respect implicit.
                local.respect = parts->part0;
                local = double_for_bipartite(local, *parts);
            }
            for (const auto& volley : local.rounds) {
                VertexSet global;
                for (Vertex v : volley) global.insert(sub.to_parent[v]);
                result.witness.rounds.push_back(std::move(global));
            }
            result.per_component.push_back(k);
            result.hunters = std::max(result.hunters, k);
            break;
        }
    }
    result.witness.hunters = result.hunters;
    return result;
}

MonotonicityReport subgraph_monotonicity_check(const Graph& g2, int trials, Rng& rng,
                                               const SolverConfig& cfg) {
    MonotonicityReport report;
    report.trials = trials;
    report.super_hunters = hunter_number(g2, cfg).hunters;
    std::uniform_real_distribution<double> drop(0.0, 0.5);
    for (int t = 0; t < trials; ++t) {
        Graph g1 = random_subgraph(g2, drop(rng), rng);
        int h1 = hunter_number(g1, cfg).hunters;
        if (h1 > report.super_hunters) report.violations.push_back({g1, h1, report.super_hunters});
    }
    return report;
}

}  // namespace hunt
