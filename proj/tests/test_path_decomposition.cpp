#include <cmath>

#include "doctest.h"
#include "hunt/errors.hpp"
#include "hunt/generators.hpp"
#include "hunt/path_decomposition.hpp"

using namespace hunt;

namespace {

int ceil_log2(int n) { return n <= 1 ? 0 : static_cast<int>(std::ceil(std::log2(n))); }

}  // namespace

TEST_CASE("axioms are checked independently") {
    auto p3 = make_path(3);
    CHECK_FALSE(path_decomposition_defect(p3, {{{0, 1}, {1, 2}}}));
    CHECK(path_decomposition_defect(p3, {{{0, 1}}}));          // 2 uncovered
    CHECK(path_decomposition_defect(p3, {{{0}, {1}, {2}}}));   // edges uncovered
    CHECK(path_decomposition_defect(p3, {{{0, 1}, {2}, {1, 2}}}));  // 1 not contiguous
    CHECK(path_decomposition_defect(p3, {{{0, 1, 7}}}));
    CHECK_THROWS_AS(validate_path_decomposition(p3, {{{0}, {1}, {2}}}), InputError);
}

TEST_CASE("centroid decomposition on small trees") {
    auto single = centroid_path_decomposition(make_path(1));
    CHECK(single.bags == std::vector<VertexSet>{{0}});
    CHECK(single.width() == 0);

    auto p3 = centroid_path_decomposition(make_path(3));
    CHECK(p3.bags == std::vector<VertexSet>{{0, 1}, {1, 2}});
    CHECK(p3.width() == 1);

    // Star: centroid is the hub, every leaf gets its own bag.
    auto star = centroid_path_decomposition(make_caterpillar({5}));
    CHECK(star.width() == 1);
    CHECK(star.bags.size() == 5);

    CHECK_THROWS_AS(centroid_path_decomposition(make_cycle(4)), InputError);
    CHECK_THROWS_AS(centroid_path_decomposition(disjoint_union(make_path(2), make_path(2))), InputError);
}

TEST_CASE("centroid tie-break picks the lowest index") {
    // P4: vertices 1 and 2 both leave a largest piece of 2.
    auto d = centroid_path_decomposition(make_path(4));
    for (const auto& bag : d.bags) CHECK(bag.contains(1));
}

TEST_CASE("random trees: valid and width at most ceil(log2 n)") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(1, trial < 50 ? 400 : 10000)(rng);
        auto t = (trial % 3 == 0) ? random_caterpillar(n, rng) : random_tree(n, rng);
        auto d = centroid_path_decomposition(t);
        CHECK_FALSE(path_decomposition_defect(t, d));
        CHECK(d.width() <= ceil_log2(n));
    }
    auto long_path = centroid_path_decomposition(make_path(10000));
    CHECK(long_path.width() <= 14);
}
