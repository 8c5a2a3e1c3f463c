#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "chordalgen/graph_io.hpp"
#include "chordalgen/intersection.hpp"

using namespace chordalgen;

namespace {

Graph triangle() { return Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("edge list format fixtures") {
    CHECK(format_graph(triangle(), GraphFormat::edgelist) == "3 3\n1 2\n1 3\n2 3\n");
    const Graph empty2 = Graph::from_edge_list(2, {});
    CHECK(format_graph(empty2, GraphFormat::edgelist) == "2 0\n");
}

TEST_CASE("dimacs format fixture") {
    CHECK(format_graph(triangle(), GraphFormat::dimacs) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("round trips reparse to an identical graph") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(rng.uniform_below(40));
        const auto result = chordal_gen(n, ConnectingParams{1.0}, rng);
        for (GraphFormat format : {GraphFormat::edgelist, GraphFormat::dimacs}) {
            const std::string text = format_graph(result.graph, format);
            const Graph back = parse_graph_text(text, format);
            CHECK(back == result.graph);
        }
    }
}

TEST_CASE("file round trip") {
    const std::string path = "io_roundtrip_test.el";
    emit_graph(triangle(), GraphFormat::edgelist, path);
    const Graph back = parse_graph(path, GraphFormat::edgelist);
    CHECK(back == triangle());
    std::remove(path.c_str());
}

TEST_CASE("parser rejects malformed input with line numbers") {
    // self-loop
    CHECK_THROWS_WITH_AS(parse_graph_text("2 1\n1 1\n", GraphFormat::edgelist),
                         "<string>:2: self-loop", std::runtime_error);
    // header promises more edges than present
    CHECK_THROWS_WITH_AS(
        parse_graph_text("3 5\n1 2\n1 3\n2 3\n", GraphFormat::edgelist),
        "<string>:4: unexpected end of file: expected 5 edges", std::runtime_error);
    // extra edges beyond the promised count
    CHECK_THROWS_AS(parse_graph_text("3 1\n1 2\n1 3\n", GraphFormat::edgelist),
                    std::runtime_error);
    // duplicate edge, also reversed
    CHECK_THROWS_AS(parse_graph_text("3 2\n1 2\n2 1\n", GraphFormat::edgelist),
                    std::runtime_error);
    // endpoint out of range
    CHECK_THROWS_AS(parse_graph_text("3 1\n1 4\n", GraphFormat::edgelist), std::runtime_error);
    // bad header
    CHECK_THROWS_AS(parse_graph_text("x y\n", GraphFormat::edgelist), std::runtime_error);
    CHECK_THROWS_AS(parse_graph_text("p vertex 3 1\ne 1 2\n", GraphFormat::dimacs),
                    std::runtime_error);
    // junk after an edge
    CHECK_THROWS_AS(parse_graph_text("2 1\n1 2 9\n", GraphFormat::edgelist), std::runtime_error);
}

TEST_CASE("dimacs comments are skipped") {
    const Graph g = parse_graph_text("c a comment\np edge 3 1\nc another\ne 1 2\n",
                                     GraphFormat::dimacs);
    CHECK(g.n == 3);
    CHECK(g.m == 1);
}

TEST_CASE("missing file errors") {
    CHECK_THROWS_AS(parse_graph("does_not_exist.el", GraphFormat::edgelist), std::runtime_error);
}

TEST_CASE("format names parse") {
    CHECK(parse_graph_format("edgelist") == GraphFormat::edgelist);
    CHECK(parse_graph_format("dimacs") == GraphFormat::dimacs);
    CHECK_THROWS_AS(parse_graph_format("gml"), std::invalid_argument);
}

TEST_CASE("host tree dump uses the graph format") {
    Rng rng(4);
    const HostTree t = generate_random_tree(6, rng);
    const Graph g = tree_as_graph(t);
    CHECK(g.n == 6);
    CHECK(g.m == 5);
}
