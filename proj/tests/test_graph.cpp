#include <doctest.h>

#include <sstream>

#include "cyclepack/generators.hpp"
#include "cyclepack/graph.hpp"

using namespace cyclepack;

namespace {

Graph path_graph(int n) {
    Graph g;
    g.add_vertex(0);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// All graphs on vertex set 0..n-1, one bit per pair (i, j), i < j.
Graph graph_from_bits(int n, unsigned bits) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    int at = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++at)
            if (bits >> at & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("complete graph statistics") {
    auto s = stats(gen_complete(4));
    CHECK(s.n == 4);
    CHECK(s.m == 6);
    CHECK(s.average_degree == Rat(3));
    CHECK(s.min_degree == 3);
    CHECK(s.min_common_neighbors == 2);
    CHECK(Rat(3) * s.average_degree == Rat(9));
}

TEST_CASE("cycle graph statistics") {
    auto s = stats(cycle_graph(5));
    CHECK(s.average_degree == Rat(2));
    CHECK(s.min_degree == 2);
    CHECK(s.min_common_neighbors == 0);
}

TEST_CASE("complete bipartite statistics stay exact") {
    auto s = stats(gen_complete_bipartite(10, 3));
    CHECK(s.average_degree == Rat(60, 13));
    CHECK(s.min_common_neighbors == 0);
    CHECK(format_rat(s.average_degree) == "60/13");
    CHECK(format_rat(Rat(4)) == "4");
}

TEST_CASE("stats of the empty graph throws") {
    Graph g;
    CHECK_THROWS_AS(stats(g), std::invalid_argument);
}

TEST_CASE("adjacency basics") {
    Graph g;
    g.add_edge(1, 2);
    g.add_vertex(5);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 5));
    CHECK(g.degree(5) == 0);
    CHECK(g.vertices() == std::vector<VertexId>{1, 2, 5});
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.neighbors(99), std::invalid_argument);
    CHECK_THROWS_AS(g.degree(99), std::invalid_argument);
}

TEST_CASE("adding an edge twice keeps the count") {
    Graph g;
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.num_edges() == 1);
}

TEST_CASE("common neighbors are sorted") {
    Graph g = gen_complete(5);
    CHECK(common_neighbors(g, 0, 1) == std::vector<VertexId>{2, 3, 4});
    CHECK_THROWS_AS(common_neighbors(g, 0, 9), std::invalid_argument);
}

TEST_CASE("delete_vertex removes incident edges") {
    Graph g = gen_complete(4);
    Graph h = delete_vertex(g, 0);
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 3);
    CHECK(!h.has_vertex(0));
}

TEST_CASE("contract_edge keeps the smaller id") {
    Graph g = cycle_graph(4);
    Graph h = contract_edge(g, 1, 2);
    CHECK(h.has_vertex(1));
    CHECK(!h.has_vertex(2));
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 3);
    CHECK_THROWS_AS(contract_edge(g, 0, 2), std::invalid_argument);
}

TEST_CASE("contraction edge count identity on all small graphs") {
    for (int n = 2; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned bits = 0; bits < (1u << pairs); ++bits) {
            Graph g = graph_from_bits(n, bits);
            for (const auto& [u, v] : g.edges()) {
                std::size_t common = common_neighbors(g, u, v).size();
                Graph h = contract_edge(g, u, v);
                REQUIRE(h.num_edges() == g.num_edges() - 1 - common);
                REQUIRE(h.num_vertices() == g.num_vertices() - 1);
            }
        }
    }
}

TEST_CASE("contraction edge count identity spot checks at n = 6") {
    for (unsigned bits : {0x1234u, 0x7fffu, 0x5a5au, 0x4321u, 0x7abcu}) {
        Graph g = graph_from_bits(6, bits);
        for (const auto& [u, v] : g.edges()) {
            std::size_t common = common_neighbors(g, u, v).size();
            Graph h = contract_edge(g, u, v);
            REQUIRE(h.num_edges() == g.num_edges() - 1 - common);
        }
    }
}

TEST_CASE("edge list round trip") {
    Graph g = gen_complete_bipartite(3, 2);
    g.add_vertex(50);
    std::string text = format_edge_list(g);
    CHECK(parse_edge_list(text) == g);
}

TEST_CASE("edge list parsing accepts comments and isolated vertices") {
    Graph g = parse_edge_list("# top comment\n0 1\n\n7\n1 2 # trailing comment\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_vertex(7));
    CHECK(g.degree(7) == 0);
}

TEST_CASE("edge list parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n0 1 2\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 3\n"), std::invalid_argument);
}

TEST_CASE("write then read preserves isolated vertices") {
    Graph g;
    g.add_vertex(4);
    g.add_edge(1, 2);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);
}

TEST_CASE("empty text parses to the empty graph") {
    Graph g = parse_edge_list("");
    CHECK(g.empty());
}
