#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chordalgen/alg1.hpp"
#include "chordalgen/analysis.hpp"

using namespace chordalgen;

TEST_CASE("ubc near zero yields a random tree") {
    // One seed neighbor per vertex: n-1 edges, no fill needed.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        const Graph g = generate_alg1({200, 0.0}, rng);
        CHECK(g.m == 199);
        CHECK(is_chordal(g));
        CHECK(connected_components(g).count == 1);
    }
}

TEST_CASE("ubc=1 yields the complete graph") {
    Rng rng(2);
    const Graph g = generate_alg1({30, 1.0}, rng);
    CHECK(g.m == 435);
}

TEST_CASE("parameter validation") {
    Rng rng(1);
    CHECK_THROWS_AS(generate_alg1({0, 0.5}, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_alg1({10, -0.1}, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_alg1({10, 1.5}, rng), std::invalid_argument);
}

TEST_CASE("outputs are chordal and connected across parameters") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Rng rng(seed);
        const int n = 2 + static_cast<int>(rng.uniform_below(120));
        const double ubc = rng.uniform_real() * rng.uniform_real();  // biased small
        const Graph g = generate_alg1({n, ubc}, rng);
        CHECK(is_chordal(g));
        CHECK(connected_components(g).count == 1);
        // Every vertex has a neighbor, so no maximal clique is a singleton.
        const auto cliques = maximal_cliques(g);
        for (const auto& clique : cliques) CHECK(clique.size() >= 2);
    }
}

TEST_CASE("single vertex graph") {
    Rng rng(3);
    const Graph g = generate_alg1({1, 0.5}, rng);
    CHECK(g.n == 1);
    CHECK(g.m == 0);
}

TEST_CASE("deterministic under a fixed seed") {
    Rng a(77), b(77);
    CHECK(generate_alg1({64, 0.05}, a) == generate_alg1({64, 0.05}, b));
}
