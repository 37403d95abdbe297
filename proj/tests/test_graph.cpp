#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "switchhom/graph.hpp"

using namespace switchhom;
using testutil::cycle_graph;
using testutil::path_graph;

TEST_CASE("construction normalizes and validates edges") {
    EdgeColouredGraph g(3, 2, {Edge{2, 1, 1}, Edge{1, 0, 2}});
    CHECK(g.edges() == std::vector<Edge>{Edge{0, 1, 2}, Edge{1, 2, 1}});
    CHECK(g.neighbours(1) == std::vector<std::pair<int, int>>{{0, 0}, {2, 1}});

    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {Edge{1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {Edge{0, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {Edge{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColouredGraph(3, 2, {Edge{0, 1, 1}, Edge{1, 0, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(EdgeColouredGraph(3, 0, {}), std::invalid_argument);
}

TEST_CASE("edge lookup") {
    EdgeColouredGraph g = path_graph(3, {1, 2});
    CHECK(g.edge_index(0, 1) == 0);
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(g.edge_colour(1, 2) == 2);
    CHECK_FALSE(g.edge_index(0, 2).has_value());
    CHECK_FALSE(g.edge_colour(0, 2).has_value());
}

TEST_CASE("recolouring keeps the underlying graph") {
    EdgeColouredGraph g = path_graph(3, {1, 2});
    EdgeColouredGraph h = g.with_colours({3, 3});
    CHECK(h.colours() == std::vector<int>{3, 3});
    CHECK(g.same_underlying_graph(h));
    CHECK(g != h);
    CHECK(g == g.with_colours(g.colours()));
    CHECK_FALSE(g.same_underlying_graph(path_graph(3, {1, 2, 1})));
    CHECK_THROWS_AS(g.with_colours({1}), std::invalid_argument);
}

TEST_CASE("structure of a bipartite graph") {
    GraphStructure st = structure(path_graph(2, {1, 2, 1}));
    CHECK(st.is_bipartite);
    CHECK(st.side == std::vector<int>{0, 1, 0, 1});
    CHECK(st.odd_cycle.empty());
    CHECK(st.spanning.cotree_edges.empty());
}

TEST_CASE("structure of an odd cycle") {
    GraphStructure st = structure(cycle_graph(2, {1, 1, 2}));
    CHECK_FALSE(st.is_bipartite);
    CHECK(st.odd_cycle == std::vector<int>{0, 1, 2, 0});
}

TEST_CASE("spanning forest of a square") {
    EdgeColouredGraph g = cycle_graph(2, {1, 1, 1, 1});
    GraphStructure st = structure(g);
    CHECK(st.is_bipartite);
    const SpanningStructure& sp = st.spanning;
    CHECK(sp.roots == std::vector<int>{0});
    CHECK(sp.parent == std::vector<int>{-1, 0, 1, 0});
    CHECK(sp.depth == std::vector<int>{0, 1, 2, 1});
    CHECK(sp.cotree_edges == std::vector<int>{3});
    CHECK(sp.fundamental_cycle(g, 3) == std::vector<int>{0, 1, 2, 3, 0});
}

TEST_CASE("components are numbered by smallest vertex") {
    EdgeColouredGraph g(5, 2, {Edge{1, 2, 1}, Edge{3, 4, 2}});
    SpanningStructure sp = structure(g).spanning;
    CHECK(sp.roots == std::vector<int>{0, 1, 3});
    CHECK(sp.component == std::vector<int>{0, 1, 1, 2, 2});
}

TEST_CASE("Abelianization relabels colours by block") {
    BlockSystem blocks = block_system(testutil::d4());
    EdgeColouredGraph g = cycle_graph(4, {1, 2, 3, 4});
    EdgeColouredGraph ga = abelianize_graph(g, blocks);
    CHECK(ga.m() == 2);
    CHECK(ga.colours() == std::vector<int>{1, 2, 2, 1});
    CHECK(ga.same_underlying_graph(g));

    CHECK_THROWS_AS(abelianize_graph(path_graph(3, {1, 2}), blocks), std::invalid_argument);
}

TEST_CASE("graph file parsing") {
    EdgeColouredGraph g = parse_graph("# a path\necg 2 3\n0 1 1\n\n1 2 2 # last edge\n");
    CHECK(g == path_graph(2, {1, 2}));

    EdgeColouredGraph empty = parse_graph("ecg 1 4\n");
    CHECK(empty.n() == 4);
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("graph parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("egg 2 3\n"), "line 1: expected header 'ecg <m> <n>'",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("ecg 2 3\n0 0 1\n"), "line 2: loop at vertex 0",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("ecg 2 3\n0 1 1\n1 0 2\n"), "line 3: duplicate edge 1 0",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("ecg 2 3\n0 3 1\n"), "line 2: edge endpoint out of range 0..2",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("ecg 2 3\n0 1 5\n"), "line 2: edge colour out of range 1..2",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("# nothing\n"), std::invalid_argument);
}

TEST_CASE("graph serialization round trip") {
    for (const EdgeColouredGraph& g :
         {cycle_graph(3, {1, 2, 3}), path_graph(2, {1, 2, 1}), parse_graph("ecg 2 1\n")}) {
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    CHECK(serialize_graph(testutil::k2(2, 1)) == "ecg 2 2\n0 1 1\n");
}
