#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "chordalgen/analysis.hpp"
#include "chordalgen/intersection.hpp"
#include "chordalgen/oracle.hpp"

using namespace chordalgen;

namespace {

Graph complete_graph(int n) {
    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) edges.push_back({v, w});
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph::from_edge_list(n, edges);
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (rng.uniform_real() < p) edges.push_back({v, w});
    return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("mcs order is a peo on complete graphs") {
    const Graph g = complete_graph(6);
    CHECK(is_valid_peo(g, mcs_order(g)));
    CHECK(is_chordal(g));
}

TEST_CASE("C4 has no peo") {
    const Graph g = cycle_graph(4);
    CHECK(!is_valid_peo(g, mcs_order(g)));
    CHECK(!is_chordal(g));
}

TEST_CASE("mcs orders on random trees are peos") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const HostTree t = generate_random_tree(2 + static_cast<int>(rng.uniform_below(40)), rng);
        const Graph g = Graph::from_edge_list(t.n, t.edges);
        CHECK(is_valid_peo(g, mcs_order(g)));
    }
}

TEST_CASE("is_chordal agrees with the brute-force oracle") {
    int chordal_seen = 0, non_chordal_seen = 0;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        Rng rng(seed);
        const int n = 4 + static_cast<int>(rng.uniform_below(5));
        const Graph g = random_graph(n, 0.15 + 0.7 * rng.uniform_real(), rng);
        const bool fast = is_chordal(g);
        CHECK(fast == oracle::brute_force_chordal(g));
        (fast ? chordal_seen : non_chordal_seen)++;
    }
    CHECK(chordal_seen > 100);
    CHECK(non_chordal_seen > 100);
}

TEST_CASE("maximal_cliques small fixtures") {
    // path a-b-c
    const Graph path = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    auto cliques = maximal_cliques(path);
    std::sort(cliques.begin(), cliques.end());
    CHECK(cliques == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    const Graph k5 = complete_graph(5);
    cliques = maximal_cliques(k5);
    REQUIRE(cliques.size() == 1);
    CHECK(cliques[0] == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("maximal_cliques rejects non-chordal input") {
    CHECK_THROWS_AS(maximal_cliques(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("maximal_cliques matches brute force on small chordal graphs") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 4000 && tested < 400; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(rng.uniform_below(16));
        const Graph g = random_graph(n, rng.uniform_real(), rng);
        if (!is_chordal(g)) continue;
        ++tested;
        auto mine = maximal_cliques(g);
        std::sort(mine.begin(), mine.end());
        CHECK(mine == oracle::brute_force_cliques(g));
        // Dirac bound and the clique-size sum bound.
        CHECK(static_cast<int>(mine.size()) <= g.n);
        std::int64_t total = 0;
        for (const auto& c : mine) total += static_cast<std::int64_t>(c.size());
        CHECK(total <= static_cast<std::int64_t>(g.n) + g.m);
    }
    CHECK(tested == 400);
}

TEST_CASE("clique cover properties on generated chordal graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto result = chordal_gen(80, GrowingParams{12}, rng);
        const auto cliques = maximal_cliques(result.graph);
        // Every edge inside some clique; every vertex covered.
        std::vector<char> covered(80, 0);
        std::vector<std::vector<char>> edge_covered(80, std::vector<char>(80, 0));
        for (const auto& c : cliques)
            for (std::size_t a = 0; a < c.size(); ++a) {
                covered[c[a]] = 1;
                for (std::size_t b = a + 1; b < c.size(); ++b)
                    edge_covered[c[a]][c[b]] = edge_covered[c[b]][c[a]] = 1;
            }
        for (int v = 0; v < 80; ++v) {
            CHECK(covered[v]);
            for (int w : result.graph.adj(v)) CHECK(edge_covered[v][w]);
        }
    }
}

TEST_CASE("connected_components fixtures") {
    CHECK(connected_components(complete_graph(7)).count == 1);
    const Graph isolated = Graph::from_edge_list(5, {});
    CHECK(connected_components(isolated).count == 5);

    // The p=2 lower-bound instance is five disjoint cliques.
    const auto instance = oracle::lower_bound_instance(2);
    const auto lists = node_clique_lists(instance.subtrees);
    const auto ct = build_clique_tree(lists, instance.host);
    const Graph g = build_graph(ct, instance.host.n);
    CHECK(connected_components(g).count == 5);
}

TEST_CASE("run_report on K5") {
    const RunReport report = run_report(complete_graph(5));
    CHECK(report.density == doctest::Approx(1.0));
    CHECK(report.clique_count == 1.0);
    CHECK(report.clique_min == 5.0);
    CHECK(report.clique_max == 5.0);
    CHECK(report.clique_mean == 5.0);
    CHECK(report.clique_sd == 0.0);
    REQUIRE(report.histogram.size() == 1);
    CHECK(report.histogram[0] == 1.0);
}

TEST_CASE("run_report on the p=2 lower-bound instance") {
    const auto instance = oracle::lower_bound_instance(2);
    const auto lists = node_clique_lists(instance.subtrees);
    const auto ct = build_clique_tree(lists, instance.host);
    const Graph g = build_graph(ct, instance.host.n);
    const RunReport report = run_report(g);
    // Clique sizes {8,2,2,2,2}: mean 3.2, min 2, max 8.
    CHECK(report.clique_count == 5.0);
    CHECK(report.clique_mean == doctest::Approx(3.2));
    CHECK(report.clique_min == 2.0);
    CHECK(report.clique_max == 8.0);
    // Bins [1-5] and [6-10].
    REQUIRE(report.histogram.size() == 2);
    CHECK(report.histogram[0] == 4.0);
    CHECK(report.histogram[1] == 1.0);
    // Population sd of {8,2,2,2,2}.
    const double expect_sd = std::sqrt((4 * (2 - 3.2) * (2 - 3.2) + (8 - 3.2) * (8 - 3.2)) / 5.0);
    CHECK(report.clique_sd == doctest::Approx(expect_sd));
}

TEST_CASE("histogram bins sum to the clique count") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto result = chordal_gen(200, ConnectingParams{1.3}, rng);
        const RunReport report = run_report(result.graph);
        double total = 0.0;
        for (double bin : report.histogram) total += bin;
        CHECK(total == report.clique_count);
        CHECK(report.density >= 0.0);
        CHECK(report.density <= 1.0);
        CHECK(report.clique_min <= report.clique_mean);
        CHECK(report.clique_mean <= report.clique_max);
    }
}

TEST_CASE("aggregate_reports basics") {
    const RunReport single = run_report(complete_graph(4));
    const auto same = aggregate_reports({single});
    CHECK(same.m == single.m);
    CHECK(same.clique_mean == single.clique_mean);

    RunReport a = single, b = single;
    a.m = 10.0;
    b.m = 20.0;
    CHECK(aggregate_reports({a, b}).m == 15.0);

    CHECK_THROWS_AS(aggregate_reports({}), std::invalid_argument);
    RunReport other = single;
    other.n = 7;
    CHECK_THROWS_AS(aggregate_reports({single, other}), std::invalid_argument);
}

TEST_CASE("aggregation is reproducible under seed derivation") {
    auto collect = [] {
        std::vector<RunReport> reports;
        for (std::uint64_t run = 0; run < 10; ++run) {
            Rng rng(400 + run);
            reports.push_back(run_report(chordal_gen(120, GrowingParams{9}, rng).graph));
        }
        return aggregate_reports(reports);
    };
    const RunReport first = collect();
    const RunReport second = collect();
    CHECK(first.m == second.m);
    CHECK(first.clique_sd == second.clique_sd);
    CHECK(first.histogram == second.histogram);
}
