#include <doctest.h>

#include "degpath/colorpath.hpp"
#include "degpath/oracle.hpp"
#include "fixtures.hpp"

using namespace degpath;

namespace {
const TrialBudget kDefault{};                    // exact for n <= 18
const TrialBudget kMonteCarlo{4000, 123, 0};     // forces the randomized engine
}  // namespace

TEST_CASE("random_coloring is uniform-range and reproducible") {
    Coloring a = random_coloring(50, 7, 42, 3);
    Coloring b = random_coloring(50, 7, 42, 3);
    Coloring c = random_coloring(50, 7, 42, 4);
    CHECK(a.color == b.color);
    CHECK(a.color != c.color);
    for (int col : a.color) {
        CHECK(col >= 1);
        CHECK(col <= 7);
    }
    CHECK_THROWS_AS(random_coloring(5, 0, 1, 1), PreconditionError);
}

TEST_CASE("longest_path_at_least on the canonical fixtures") {
    SUBCASE("P5 with q=5 returns the path itself") {
        auto res = longest_path_at_least(fixtures::path_graph(5), 5, kDefault);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->size() == 5);
        CHECK(verify_witness(fixtures::path_graph(5), *res.witness));
    }
    SUBCASE("K4 with q=5 is impossible") {
        CHECK_FALSE(longest_path_at_least(fixtures::complete_graph(4), 5, kDefault).witness);
        CHECK_FALSE(longest_path_at_least(fixtures::complete_graph(4), 5, kMonteCarlo).witness);
    }
    SUBCASE("Petersen has a Hamiltonian path") {
        Graph g = fixtures::petersen();
        CHECK(brute_longest_path(g).size() == 10);  // oracle first
        auto res = longest_path_at_least(g, 10, kDefault);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->size() == 10);
        auto mc = longest_path_at_least(g, 10, kMonteCarlo);
        REQUIRE(mc.witness.has_value());
        CHECK(verify_witness(g, *mc.witness));
    }
    SUBCASE("q below 1 is rejected") {
        CHECK_THROWS_AS(longest_path_at_least(fixtures::path_graph(3), 0, kDefault),
                        PreconditionError);
    }
}

TEST_CASE("longest_cycle_at_least on the canonical fixtures") {
    SUBCASE("C6 with q=6") {
        auto res = longest_cycle_at_least(fixtures::cycle_graph(6), 6, kDefault);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->size() == 6);
    }
    SUBCASE("Petersen is hypohamiltonian: longest cycle is 9") {
        Graph g = fixtures::petersen();
        auto oracle = brute_longest_cycle(g);
        REQUIRE(oracle.has_value());
        CHECK(oracle->size() == 9);  // oracle first
        CHECK_FALSE(longest_cycle_at_least(g, 10, kDefault).witness);
        CHECK_FALSE(longest_cycle_at_least(g, 10, kMonteCarlo).witness);
        auto res = longest_cycle_at_least(g, 9, kMonteCarlo);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->size() == 9);
        CHECK(verify_witness(g, *res.witness));
    }
    SUBCASE("q below 3 is rejected") {
        CHECK_THROWS_AS(longest_cycle_at_least(fixtures::cycle_graph(4), 2, kDefault),
                        PreconditionError);
    }
}

TEST_CASE("st_path_at_least on the canonical fixtures") {
    SUBCASE("C5 between adjacent endpoints has a Hamiltonian path") {
        Graph g = fixtures::cycle_graph(5);
        auto res = st_path_at_least(g, 0, 1, 5, kDefault);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->vertices.front() == 0);
        CHECK(res.witness->vertices.back() == 1);
        CHECK(res.witness->size() == 5);
    }
    SUBCASE("P3 cannot reach 4 vertices") {
        CHECK_FALSE(st_path_at_least(fixtures::path_graph(3), 0, 2, 4, kDefault).witness);
    }
    SUBCASE("K4 has Hamiltonian (s,t)-paths") {
        Graph g = fixtures::complete_graph(4);
        auto oracle = detail::exact_longest_st_path(g, 0, 3);
        REQUIRE(oracle.has_value());
        CHECK(oracle->size() == 4);  // oracle first
        auto res = st_path_at_least(g, 0, 3, 4, kMonteCarlo);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->size() == 4);
    }
    SUBCASE("s = t is rejected") {
        CHECK_THROWS_AS(st_path_at_least(fixtures::cycle_graph(4), 1, 1, 2, kDefault),
                        PreconditionError);
    }
}

TEST_CASE("Monte-Carlo answers are sound and deterministic per seed") {
    Graph g = gen_random_with_degeneracy(24, 3, 5);
    TrialBudget b1{500, 77, 0};
    auto r1 = longest_path_at_least(g, 8, b1);
    auto r2 = longest_path_at_least(g, 8, b1);
    REQUIRE(r1.witness.has_value());
    CHECK(r1.witness->vertices == r2.witness->vertices);
    CHECK(r1.trials_used == r2.trials_used);
    CHECK(verify_witness(g, *r1.witness));
}

TEST_CASE("exact mode agrees with the brute-force oracle on small graphs") {
    std::mt19937_64 mt(31);
    int checked = 0;
    while (checked < 50) {
        int n = 5 + static_cast<int>(mt() % 8);  // 5..12
        Graph g = fixtures::random_graph(mt(), n, 0.4);
        if (!is_connected(g)) continue;
        ++checked;
        int best = brute_longest_path(g).size();
        for (int q = 1; q <= n; ++q) {
            bool want = best >= q;
            CHECK(longest_path_at_least(g, q, kDefault).witness.has_value() == want);
        }
        auto cyc = brute_longest_cycle(g);
        for (int q = 3; q <= n; ++q) {
            bool want = cyc && cyc->size() >= q;
            CHECK(longest_cycle_at_least(g, q, kDefault).witness.has_value() == want);
        }
    }
}

TEST_CASE("default trial budget follows the capped exponential") {
    CHECK(default_color_trials(1) == 3);
    CHECK(default_color_trials(5) == 149);
    CHECK(default_color_trials(30) == 1000000);
}
