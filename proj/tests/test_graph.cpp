#include "doctest.h"
#include "hunt/errors.hpp"
#include "hunt/generators.hpp"
#include "hunt/graph.hpp"

using namespace hunt;

TEST_CASE("graph construction rejects loops, duplicates and bad indices") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
    Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<Vertex>{1, 3});
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) CHECK(g.adjacent(w, v));
}

TEST_CASE("make_grid") {
    SUBCASE("1x3 is a path") {
        auto g = make_grid(1, 3);
        CHECK(g.order() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.adjacent(0, 1));
        CHECK(g.adjacent(1, 2));
    }
    SUBCASE("2x2 is C4") {
        auto g = make_grid(2, 2);
        CHECK(g.edge_count() == 4);
        for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
    }
    SUBCASE("edge count 2nm - n - m") {
        for (int r = 1; r <= 10; ++r)
            for (int c = 1; c <= 10; ++c)
                CHECK(make_grid(r, c).edge_count() == static_cast<std::size_t>(2 * r * c - r - c));
        CHECK(make_grid(10, 10).order() == 100);
        CHECK(make_grid(10, 10).edge_count() == 180);
    }
    SUBCASE("coordinates round-trip and edges have Manhattan length 1") {
        auto g = make_grid(4, 7);
        for (Vertex v = 0; v < g.order(); ++v) {
            auto c = g.coords(v);
            CHECK(g.vertex_at(c.row, c.col) == v);
        }
        CHECK(g.coords(0) == Cell{1, 1});
        CHECK(g.coords(7) == Cell{2, 1});
        for (const auto& e : g.edges()) {
            auto a = g.coords(e.u), b = g.coords(e.v);
            CHECK(std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1);
        }
    }
    CHECK_THROWS_AS(make_grid(0, 3), InputError);
    CHECK_THROWS_AS(make_grid(3, 0), InputError);
    CHECK_THROWS_AS(make_grid(2, 2).vertex_at(3, 1), InputError);
    CHECK_THROWS_AS(make_path(3).coords(0), InputError);
}

TEST_CASE("neighborhood") {
    CHECK(neighborhood(make_path(3), {0, 2}) == VertexSet{1});
    CHECK(neighborhood(make_grid(3, 3), {}).empty());
    CHECK(neighborhood(make_cycle(4), {0}) == VertexSet{1, 3});
    CHECK_THROWS_AS(neighborhood(make_path(3), {5}), InputError);

    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(12, 0.3, rng);
        VertexSet s;
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < 12; ++v)
            if (rng() % 2) {
                s.insert(v);
                degree_sum += g.degree(v);
            }
        auto nb = neighborhood(g, s);
        CHECK_FALSE(nb.intersects(s));
        CHECK(nb.size() <= degree_sum);
    }
}

TEST_CASE("bipartition") {
    auto p3 = bipartition(make_path(3));
    CHECK(p3.part0 == VertexSet{0, 2});
    CHECK(p3.part1 == VertexSet{1});

    try {
        bipartition(make_cycle(3));
        FAIL("expected NotBipartiteError");
    } catch (const NotBipartiteError& e) {
        const auto& walk = e.odd_walk();
        REQUIRE(walk.size() >= 2);
        CHECK(walk.front() == walk.back());
        CHECK((walk.size() - 1) % 2 == 1);
        auto c3 = make_cycle(3);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) CHECK(c3.adjacent(walk[i], walk[i + 1]));
    }

    auto grid = make_grid(3, 3);
    auto parts = bipartition(grid);
    CHECK(parts.part0.size() == 5);
    CHECK(parts.part1.size() == 4);
    for (Vertex v : parts.part0) {
        auto c = grid.coords(v);
        CHECK((c.row + c.col) % 2 == 0);
    }

    // Each component anchors its lowest vertex in part0.
    auto forest = disjoint_union(make_path(2), make_path(3));
    auto fp = bipartition(forest);
    CHECK(fp.part0 == VertexSet{0, 2, 4});

    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        auto g = random_connected_bipartite(10, 0.3, rng);
        auto b = bipartition(g);
        CHECK_FALSE(b.part0.intersects(b.part1));
        CHECK((b.part0 | b.part1) == VertexSet::full(10));
        for (const auto& e : g.edges()) CHECK(b.part0.contains(e.u) != b.part0.contains(e.v));
    }
}

TEST_CASE("components") {
    CHECK(components(make_grid(3, 3)) == std::vector<VertexSet>{VertexSet::full(9)});
    CHECK(components(make_empty(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(components(disjoint_union(make_path(2), make_path(3))) ==
          std::vector<VertexSet>{{0, 1}, {2, 3, 4}});
    CHECK(components(make_empty(0)).empty());
}

TEST_CASE("induced subgraph renumbers ascending") {
    auto sub = induced_subgraph(make_cycle(5), {1, 2, 4});
    CHECK(sub.to_parent == std::vector<Vertex>{1, 2, 4});
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("generators") {
    auto cat = make_caterpillar({2, 0, 1});
    CHECK(cat.order() == 6);
    CHECK(is_tree(cat));
    auto spider = make_spider(3, 2);
    CHECK(spider.order() == 7);
    CHECK(spider.degree(0) == 3);
    CHECK(is_tree(spider));
    Rng rng(5);
    for (int n : {1, 2, 10, 300}) {
        CHECK(is_tree(random_tree(n, rng)));
        CHECK(is_tree(random_caterpillar(n, rng)));
    }
    for (int t = 0; t < 50; ++t) {
        auto g = random_connected_bipartite(9, 0.4, rng);
        CHECK(is_connected(g));
        CHECK(is_bipartite(g));
    }
    CHECK_FALSE(is_tree(make_cycle(4)));
}
