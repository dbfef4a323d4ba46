#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "latmax/search.hpp"
#include "test_support.hpp"

using namespace latmax;

namespace {

constexpr Int kExpected[] = {0, 3, 4, 6, 6, 8, 9, 10, 10, 12, 12};  // A(1)..A(10)

void check_witness(const SearchResult& r) {
    REQUIRE(is_balanced(r.witness));
    CHECK(static_cast<Int>(r.witness.size()) == r.a_of_n);
    CHECK_FALSE(Rational(r.n) < valuation_m(r.witness));  // total norm within budget
    const Polytope p = reconstruct(r.witness);
    CHECK(static_cast<Int>(p.f0()) == r.a_of_n);
    CHECK(simplicial_diameter(p) <= r.n);
}

}  // namespace

TEST_CASE("direction table") {
    const DirectionTable t = direction_table(6);
    Int expected = 0;
    for (Int l = 1; l <= 6; ++l) expected += 3 * totient(l);
    CHECK(static_cast<Int>(t.entries.size()) == expected);
    for (std::size_t i = 1; i < t.entries.size(); ++i)
        CHECK(t.entries[i - 1].norm <= t.entries[i].norm);
    CHECK(t.affordable(0, 0) == 0);
    CHECK(t.affordable(0, 3) == 3);   // three norm-1 directions
    CHECK(t.affordable(0, 9) == 6);   // plus three of norm 2
}

TEST_CASE("branch and bound reproduces the table of maximal vertex counts") {
    for (Int n = 1; n <= 10; ++n) {
        const SearchResult r = max_vertices_branch_and_bound(n);
        CHECK(r.status == SearchStatus::Exact);
        CHECK(r.a_of_n == kExpected[n]);
        check_witness(r);
        const ABound b = a_bounds(n);
        CHECK(b.lower <= r.a_of_n);
        CHECK(r.a_of_n <= b.upper);
    }
}

TEST_CASE("geometric cross-oracle") {
    CHECK(max_vertices_geometric(3).a_of_n == 6);
    CHECK(max_vertices_geometric(5).a_of_n == 8);
    CHECK_THROWS_AS(max_vertices_geometric(6), std::out_of_range);
    for (Int n = 1; n <= 5; ++n) {
        const SearchResult geo = max_vertices_geometric(n);
        const SearchResult bnb = max_vertices_branch_and_bound(n);
        CHECK(geo.a_of_n == bnb.a_of_n);
        check_witness(geo);
    }
    // the golden hexagon attains the n = 4 maximum
    const Polytope hex =
        convex_hull({LatticePoint{0, 3}, {2, 2}, {3, 1}, {2, 0}, {1, 0}, {0, 2}});
    CHECK(static_cast<Int>(hex.f0()) == max_vertices_geometric(4).a_of_n);
    CHECK(simplicial_diameter(hex) == 4);
}

TEST_CASE("results are independent of the thread count") {
    for (Int n : {5, 6, 7}) {
        SearchLimits one;
        one.threads = 1;
        SearchLimits four;
        four.threads = 4;
        const SearchResult a = max_vertices_branch_and_bound(n, one);
        const SearchResult b = max_vertices_branch_and_bound(n, four);
        CHECK(a.a_of_n == b.a_of_n);
        CHECK(a.witness == b.witness);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("disabling any single pruning rule never changes the value") {
    for (Int n = 1; n <= 6; ++n) {
        const Int reference = max_vertices_branch_and_bound(n).a_of_n;
        for (int rule = 0; rule < 3; ++rule) {
            SearchLimits limits;
            if (rule == 0) limits.use_closing_bound = false;
            if (rule == 1) limits.use_counting_bound = false;
            if (rule == 2) limits.use_incumbent_seed = false;
            const SearchResult r = max_vertices_branch_and_bound(n, limits);
            CHECK(r.status == SearchStatus::Exact);
            CHECK(r.a_of_n == reference);
        }
    }
}

TEST_CASE("node and time limits surface as inconclusive, never as a wrong answer") {
    SearchLimits starved;
    starved.max_nodes = 64;
    const SearchResult r = max_vertices_branch_and_bound(7, starved);
    CHECK(r.status == SearchStatus::Inconclusive);
    CHECK(r.a_of_n >= a_bounds(7).lower);  // carries the seeded incumbent
    CHECK(static_cast<Int>(r.witness.size()) == r.a_of_n);
    CHECK(is_balanced(r.witness));
}

TEST_CASE("enumerate_maximal uniqueness cases") {
    const EnumerationResult one = enumerate_maximal(1);
    REQUIRE(one.configs.size() == 1);
    CHECK(one.configs[0] == make_configuration(full_vectors(s_leq(1))));

    const EnumerationResult three = enumerate_maximal(3);
    REQUIRE(three.configs.size() == 1);
    CHECK(three.configs[0] == make_configuration(full_vectors(s_leq(2))));

    const EnumerationResult four = enumerate_maximal(4);
    CHECK(four.a_of_n == 6);
    CHECK(four.configs.size() > 1);
    const auto hexagon_config = d_map(
        convex_hull({LatticePoint{0, 3}, {2, 2}, {3, 1}, {2, 0}, {1, 0}, {0, 2}}));
    const auto small_hexagon = make_configuration(full_vectors(s_leq(2)));
    CHECK(std::count(four.configs.begin(), four.configs.end(), hexagon_config) == 1);
    CHECK(std::count(four.configs.begin(), four.configs.end(), small_hexagon) == 1);
    for (const auto& config : four.configs) {
        CHECK(is_balanced(config));
        CHECK(config.size() == 6);
        CHECK(simplicial_diameter(reconstruct(config)) <= 4);
    }
}

TEST_CASE("minimum norm sum matches the saturated-set value") {
    CHECK(minimum_norm_sum(3).value == 3);
    CHECK(minimum_norm_sum(4).value == 5);
    CHECK(minimum_norm_sum(6).value == 9);
    for (Int k = 1; k <= 12; ++k) {
        // saturated value for the decomposition of k
        Int q = 0, cnt = 0;
        while (cnt + 3 * totient(q + 1) <= k) { ++q; cnt += 3 * totient(q); }
        Int expected = (q + 1) * (k - cnt);
        for (Int l = 1; l <= q; ++l) expected += 3 * l * totient(l);
        const MinNormSumResult r = minimum_norm_sum(k);
        CHECK(r.status == SearchStatus::Exact);
        CHECK(r.value == expected);
    }
}

TEST_CASE("vertex-maximality of the full-level family at small q") {
    for (Int q = 1; q <= 3; ++q) {
        const SaturatedSet s = s_leq(q);
        const Int n = n_formula(s).as_integer();
        const SearchResult r = max_vertices_branch_and_bound(n);
        CHECK(r.a_of_n == f0_formula(s));
    }
}
