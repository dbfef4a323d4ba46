#include <catch2/catch_amalgamated.hpp>

#include "latmax/polytope.hpp"
#include "test_support.hpp"

using namespace latmax;

namespace {

// The 6-vertex polygon inscribed in the 4-fold dilated triangle used as a
// golden value throughout (vertex list in canonical form).
Polytope hexagon_in_4delta() {
    return convex_hull({LatticePoint{0, 3}, {2, 2}, {3, 1}, {2, 0}, {1, 0}, {0, 2}});
}

}  // namespace

TEST_CASE("convex hull basics") {
    const Polytope point = convex_hull({LatticePoint{3, 4}});
    CHECK(point.vertices == std::vector<LatticePoint>{{0, 0}});

    const Polytope segment = convex_hull({LatticePoint{0, 0}, {1, 0}, {2, 0}});
    CHECK(segment.vertices == std::vector<LatticePoint>{{0, 0}, {2, 0}});

    const Polytope square = convex_hull({LatticePoint{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(square.f0() == 4);
    CHECK(square.vertices == std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    CHECK_THROWS_AS(convex_hull(std::vector<LatticePoint>{}), std::invalid_argument);

    // translation normalization and duplicate points
    const Polytope shifted = convex_hull({LatticePoint{5, 7}, {6, 7}, {5, 8}, {5, 7}});
    CHECK(shifted.vertices == std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("d_map examples") {
    const Polytope triangle = convex_hull({LatticePoint{0, 0}, {1, 0}, {0, 1}});
    const auto fan = canonical_normal_fan();
    CHECK(d_map(triangle) == make_configuration({fan[0], fan[1], fan[2]}));

    CHECK(d_map(convex_hull({LatticePoint{0, 0}})).empty());

    const Polytope segment = convex_hull({LatticePoint{0, 0}, {2, 0}});
    CHECK(d_map(segment) == make_configuration({{0, 2}, {0, -2}}));
}

TEST_CASE("golden hexagon: configuration, valuation, diameter, roundtrip") {
    const Polytope hex = hexagon_in_4delta();
    CHECK(hex.vertices ==
          std::vector<LatticePoint>{{0, 2}, {1, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 3}});
    CHECK(simplicial_diameter(hex) == 4);
    const VectorConfiguration config = d_map(hex);
    CHECK(config.size() == 6);
    CHECK(is_balanced(config));
    CHECK(valuation_m(config) == Rational(4));
    CHECK(reconstruct(config) == hex);
}

TEST_CASE("reconstruct examples") {
    const auto fan = canonical_normal_fan();
    const Polytope triangle = reconstruct(make_configuration({fan[0], fan[1], fan[2]}));
    CHECK(triangle == convex_hull({LatticePoint{0, 0}, {1, 0}, {0, 1}}));

    CHECK(reconstruct(VectorConfiguration{}) == convex_hull({LatticePoint{0, 0}}));

    CHECK_THROWS_AS(reconstruct(make_configuration({{1, 1}, {0, -1}})), std::invalid_argument);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(make_configuration({{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_configuration({{1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_NOTHROW(make_configuration({{1, 1}, {-1, -1}}));  // opposite directions are distinct
}

TEST_CASE("minkowski sum examples") {
    const Polytope triangle = convex_hull({LatticePoint{0, 0}, {1, 0}, {0, 1}});
    const Polytope point = convex_hull({LatticePoint{2, 5}});
    const Polytope hex = hexagon_in_4delta();

    CHECK(minkowski_sum(hex, point) == hex);
    CHECK(minkowski_sum(triangle, triangle) ==
          convex_hull({LatticePoint{0, 0}, {2, 0}, {0, 2}}));
    CHECK(d_map(minkowski_sum(hex, triangle)) == config_merge(d_map(hex), d_map(triangle)));
}

TEST_CASE("config merge examples") {
    const auto fan = canonical_normal_fan();
    const VectorConfiguration d_delta = make_configuration({fan[0], fan[1], fan[2]});
    CHECK(config_merge(d_delta, d_delta) == make_configuration({{2, 2}, {-2, 0}, {0, -2}}));
    CHECK(config_merge(d_delta, VectorConfiguration{}) == d_delta);
    CHECK(config_merge(make_configuration({{1, 1}}), make_configuration({{2, 2}})) ==
          make_configuration({{3, 3}}));
}

TEST_CASE("diameter examples") {
    CHECK(simplicial_diameter(convex_hull({LatticePoint{0, 0}})) == 0);
    CHECK(simplicial_diameter(hexagon_in_4delta()) == 4);
    const Polytope octagon = convex_hull(
        {LatticePoint{3, 1}, {3, 0}, {2, 0}, {1, 1}, {0, 3}, {0, 4}, {1, 4}, {2, 3}});
    CHECK(octagon.f0() == 8);
    CHECK(simplicial_diameter(octagon) == 5);
}

TEST_CASE("valuation examples") {
    const auto fan = canonical_normal_fan();
    CHECK(valuation_m(make_configuration({fan[0], fan[1], fan[2]})) == Rational(1));
    CHECK(valuation_m(VectorConfiguration{}) == Rational(0));
    CHECK(valuation_m(make_configuration({{1, 1}})) == Rational(1, 3));
}

TEST_CASE("bijection roundtrips on random data") {
    std::mt19937 rng(101);
    for (int i = 0; i < 3000; ++i) {
        const Polytope p = testing::random_polytope(rng);
        CHECK(reconstruct(d_map(p)) == p);
    }
    for (int i = 0; i < 3000; ++i) {
        const VectorConfiguration t = testing::random_balanced_configuration(rng);
        CHECK(d_map(reconstruct(t)) == t);
    }
}

TEST_CASE("diameter equals valuation on random polygons") {
    std::mt19937 rng(102);
    for (int i = 0; i < 3000; ++i) {
        const Polytope p = testing::random_polytope(rng);
        CHECK(Rational(simplicial_diameter(p)) == valuation_m(d_map(p)));
    }
}

TEST_CASE("minkowski additivity on random pairs") {
    std::mt19937 rng(103);
    for (int i = 0; i < 2000; ++i) {
        const Polytope p = testing::random_polytope(rng);
        const Polytope q = testing::random_polytope(rng);
        const Polytope sum = minkowski_sum(p, q);
        CHECK(d_map(sum) == config_merge(d_map(p), d_map(q)));
        CHECK(valuation_m(d_map(sum)) == valuation_m(d_map(p)) + valuation_m(d_map(q)));
    }
}

TEST_CASE("valuation identity on convex unions") {
    std::mt19937 rng(104);
    int checked = 0;
    for (int i = 0; i < 4000 && checked < 800; ++i) {
        const Polytope h = testing::random_polytope(rng);
        const auto split = testing::split_by_diagonal(h, rng);
        if (!split) continue;
        ++checked;
        const Rational lhs = valuation_m(d_map(split->left)) + valuation_m(d_map(split->right));
        const Rational rhs = valuation_m(d_map(h)) + valuation_m(d_map(split->common));
        CHECK(lhs == rhs);
    }
    CHECK(checked >= 800);
}

TEST_CASE("f0 equals configuration size except for the point") {
    std::mt19937 rng(105);
    for (int i = 0; i < 2000; ++i) {
        const Polytope p = testing::random_polytope(rng);
        if (p.f0() == 1)
            CHECK(d_map(p).empty());
        else
            CHECK(p.f0() == d_map(p).size());
    }
}
