#include <doctest.h>

#include <sstream>

#include "holes/graph.hpp"
#include "oracles.hpp"

using holes::Graph;
using holes::build_graph;
using holes::read_edge_list;
using holes::write_edge_list;

TEST_CASE("build_graph on an empty edge list") {
    Graph g = build_graph({});
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("build_graph forms K3 from a triangle") {
    Graph g = build_graph({{1, 2}, {2, 3}, {1, 3}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("build_graph deduplicates and symmetrizes") {
    Graph g = build_graph({{1, 2}, {2, 1}, {1, 2}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
}

TEST_CASE("build_graph rejects self-loops naming the pair") {
    CHECK_THROWS_WITH_AS(build_graph({{1, 2}, {7, 7}}), doctest::Contains("(7,7)"),
                         std::invalid_argument);
}

TEST_CASE("labels are compacted in ascending order and preserved") {
    Graph g = build_graph({{100, 5}, {5, 7}});
    REQUIRE(g.vertex_count() == 3);
    CHECK(g.labels == std::vector<std::uint64_t>{5, 7, 100});
    CHECK(g.has_edge(0, 2));  // 5-100
    CHECK(g.has_edge(0, 1));  // 5-7
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("edge-list parser skips comments and blank lines") {
    std::istringstream in("# header\n\n1 2 # trailing comment\n  \n2 3\n");
    Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("edge-list parser reports the offending line") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    CHECK_THROWS_WITH_AS(parse("1 2\n3\n"), doctest::Contains("line 2"), holes::ParseError);
    CHECK_THROWS_WITH_AS(parse("1 2 3\n"), doctest::Contains("got 3"), holes::ParseError);
    CHECK_THROWS_WITH_AS(parse("a b\n"), doctest::Contains("'a'"), holes::ParseError);
    CHECK_THROWS_WITH_AS(parse("-1 2\n"), doctest::Contains("'-1'"), holes::ParseError);
    CHECK_THROWS_WITH_AS(parse("1 2\n4 4\n"), doctest::Contains("self-loop"), holes::ParseError);
}

TEST_CASE("write-then-read round trip is the identity") {
    auto round_trip = [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        return read_edge_list(in);
    };
    std::uint64_t seed = 11;
    for (double p : {0.1, 0.3, 0.5})
        for (int n : {5, 17, 40}) {
            Graph g = oracles::gnp(n, p, seed++);
            CHECK(round_trip(g) == g);
        }
    Graph sparse = build_graph({{5, 100}, {100, 7}, {7, 5}, {2, 100}});
    CHECK(round_trip(sparse) == sparse);
}

TEST_CASE("writer emits each edge once with ascending labels") {
    std::ostringstream out;
    write_edge_list(out, build_graph({{3, 1}, {2, 3}}));
    CHECK(out.str() == "# vertices: 3, edges: 2\n1 3\n2 3\n");
}
