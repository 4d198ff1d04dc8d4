#include "doctest.h"
#include "hunt/errors.hpp"
#include "hunt/solver.hpp"
#include "support.hpp"

using namespace hunt;

namespace {

void check_witness(const Graph& g, const SolveOutcome& out, const VertexSet& start) {
    REQUIRE(out.winnable == out.witness.has_value());
    if (!out.witness) return;
    CHECK(out.witness->start_set(g) == start);
    CHECK(run_strategy(g, *out.witness).cleared());
    CHECK(out.witness->rounds.size() <= out.explored_states);
}

}  // namespace

TEST_CASE("wins_with_k on small examples") {
    auto c3 = make_cycle(3);
    auto lose = wins_with_k(c3, 1, VertexSet::full(3));
    CHECK_FALSE(lose.winnable);
    CHECK_FALSE(lose.witness);
    CHECK(lose.explored_states >= 1);

    auto p3 = make_path(3);
    auto win = wins_with_k(p3, 1, VertexSet::full(3));
    REQUIRE(win.winnable);
    CHECK(win.witness->rounds.size() <= 2);
    check_witness(p3, win, VertexSet::full(3));

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(9, 0.4, rng);
        VertexSet start;
        for (Vertex v = 0; v < 9; ++v)
            if (rng() % 2) start.insert(v);
        auto out = wins_with_k(g, std::max<int>(1, start.size()), start);
        REQUIRE(out.winnable);
        CHECK(out.witness->rounds.size() <= 1);
        check_witness(g, out, start);
    }

    CHECK_THROWS_AS(wins_with_k(p3, 0, {0}), InputError);
    CHECK_THROWS_AS(wins_with_k(p3, 1, {5}), InputError);
}

TEST_CASE("empty start is already won") {
    auto out = wins_with_k(make_cycle(5), 1, {});
    CHECK(out.winnable);
    REQUIRE(out.witness);
    CHECK(out.witness->rounds.empty());
}

TEST_CASE("hunter_number examples") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        auto g = make_path(n);
        auto r = hunter_number(g);
        CHECK(r.hunters == 1);
        CHECK(run_strategy(g, r.witness).cleared());
    }
    auto grid = make_grid(4, 4);
    auto r = hunter_number(grid);
    CHECK(r.hunters == 3);
    CHECK(r.witness.hunters == 3);
    CHECK_FALSE(r.witness.respect);
    CHECK(run_strategy(grid, r.witness).cleared());
    REQUIRE(r.certificates.size() == 2);
    CHECK(r.certificates[0].k == 1);
    CHECK(r.certificates[1].k == 2);

    CHECK(hunter_number(make_cycle(4)).hunters == 2);
    CHECK(hunter_number(make_cycle(3)).hunters == 2);
    CHECK(hunter_number(make_complete(5)).hunters == 4);
    CHECK(hunter_number(make_path(1)).hunters == 1);
}

TEST_CASE("spider regression") {
    // Three legs of length two around a centre; the value is frozen from
    // this solver and cross-checked against the backward oracle.
    auto spider = make_spider(3, 2);
    REQUIRE(spider.order() == 7);
    auto r = hunter_number(spider);
    CHECK(r.hunters == 1);
    CHECK(r.hunters == testing::oracle_hunter_number(spider));
    CHECK(run_strategy(spider, r.witness).cleared());

    auto longer = make_spider(3, 3);
    CHECK(hunter_number(longer).hunters == testing::oracle_hunter_number(longer));
}

TEST_CASE("disconnected graphs use the worst component") {
    auto g = disjoint_union(make_path(4), disjoint_union(make_grid(3, 3), make_cycle(3)));
    auto r = hunter_number(g);
    CHECK(r.per_component == std::vector<int>{1, 2, 2});
    CHECK(r.hunters == 2);
    CHECK(run_strategy(g, r.witness).cleared());

    auto isolated = make_empty(3);
    auto ri = hunter_number(isolated);
    CHECK(ri.hunters == 1);
    CHECK(run_strategy(isolated, ri.witness).cleared());
}

TEST_CASE("solver agrees with the backward oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        auto g = random_graph(n, 0.45, rng);
        const auto all = VertexSet::full(n);
        for (int k = 1; k <= 3; ++k) {
            CAPTURE(trial);
            CAPTURE(k);
            auto out = wins_with_k(g, k, all);
            CHECK(out.winnable == testing::oracle_wins(g, k, testing::to_mask(all)));
            check_witness(g, out, all);
        }
    }
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_connected_bipartite(8, 0.35, rng);
        CHECK(hunter_number(g).hunters == testing::oracle_hunter_number(g));
    }
}

TEST_CASE("antichain pruning does not change verdicts") {
    Rng rng(23);
    SolverConfig plain;
    plain.antichain_pruning = false;
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        auto g = random_graph(n, 0.4, rng);
        for (int k = 1; k <= 3; ++k) {
            auto a = wins_with_k(g, k, VertexSet::full(n));
            auto b = wins_with_k(g, k, VertexSet::full(n), plain);
            CHECK(a.winnable == b.winnable);
            CHECK(a.explored_states <= b.explored_states);
            check_witness(g, b, VertexSet::full(n));
        }
    }
}

TEST_CASE("parallel search is deterministic") {
    SolverConfig par;
    par.parallel = true;
    for (const auto& g : {make_grid(4, 4), make_grid(3, 5), make_spider(3, 3)}) {
        auto parts = bipartition(g);
        for (int k = 1; k <= 3; ++k) {
            auto a = wins_with_k(g, k, parts.part0);
            auto b = wins_with_k(g, k, parts.part0, par);
            CHECK(a.winnable == b.winnable);
            CHECK(a.witness == b.witness);
            CHECK(a.explored_states == b.explored_states);
            CHECK(a.frontier_peak == b.frontier_peak);
        }
    }
}

TEST_CASE("bipartite search stays in one class per round") {
    auto g = make_grid(4, 4);
    auto parts = bipartition(g);
    auto out = wins_with_k(g, 2, parts.part0);
    CHECK_FALSE(out.winnable);
    CHECK(out.explored_states <= (std::uint64_t{1} << 8) * 2);
    auto win = wins_with_k(g, 3, parts.part0);
    REQUIRE(win.winnable);
    auto trace = run_strategy(g, *win.witness);
    for (std::size_t t = 0; t < trace.states.size(); ++t)
        CHECK(trace.states[t].is_subset_of(t % 2 == 0 ? parts.part0 : parts.part1));
}

TEST_CASE("state cap raises a resource error") {
    SolverConfig tiny;
    tiny.max_states = 3;
    try {
        wins_with_k(make_grid(4, 4), 2, VertexSet::full(16), tiny);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.explored_states() >= 3);
    }
    auto grid = make_grid(4, 4);
    auto part0 = bipartition(grid).part0;
    int first_capped = 0;
    for (int k = 1; k <= 3 && first_capped == 0; ++k) {
        try {
            wins_with_k(grid, k, part0, tiny);
        } catch (const ResourceError&) {
            first_capped = k;
        }
    }
    REQUIRE(first_capped > 0);
    try {
        hunter_number(grid, tiny);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.undecided_k() == first_capped);
    }
}

TEST_CASE("subgraph monotonicity") {
    Rng rng(41);
    CHECK(hunter_number(make_path(3)).hunters <= hunter_number(make_cycle(4)).hunters);

    auto c4 = make_cycle(4);
    auto rep = subgraph_monotonicity_check(c4, 20, rng);
    CHECK(rep.super_hunters == 2);
    CHECK(rep.trials == 20);
    CHECK(rep.violations.empty());

    auto g2 = make_grid(3, 4);
    CHECK(hunter_number(g2).hunters == 2);
    // Spanning tree by BFS from 0.
    std::vector<Edge> tree_edges;
    std::vector<char> seen(12, 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : g2.neighbors(queue[i]))
            if (!seen[w]) {
                seen[w] = 1;
                tree_edges.push_back({std::min(queue[i], w), std::max(queue[i], w)});
                queue.push_back(w);
            }
    Graph tree(12, tree_edges);
    CHECK(is_tree(tree));
    CHECK(hunter_number(tree).hunters <= 2);

    auto big = subgraph_monotonicity_check(g2, 25, rng);
    CHECK(big.violations.empty());
}

TEST_CASE("4 x 4 lower bound agrees with the backward oracle") {
    auto g = make_grid(4, 4);
    CHECK_FALSE(testing::oracle_wins(g, 2, 0xFFFF));
    CHECK(testing::oracle_wins(g, 3, 0xFFFF));
    CHECK_FALSE(wins_with_k(g, 2, VertexSet::full(16)).winnable);
}
