#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "switchhom/homomorphism.hpp"
#include "switchhom/switching.hpp"

using namespace switchhom;
using testutil::cycle_graph;
using testutil::k2;
using testutil::path_graph;
using testutil::perm;

TEST_CASE("finding plain homomorphisms") {
    CHECK(find_hom(k2(2, 1), k2(2, 1)) == Mapping{0, 1});
    CHECK_FALSE(find_hom(k2(2, 1), k2(2, 2)).has_value());
    CHECK(find_hom(path_graph(2, {1, 1}), k2(2, 1)) == Mapping{0, 1, 0});
    CHECK_FALSE(find_hom(cycle_graph(2, {1, 1, 1}), k2(2, 1)).has_value());
    CHECK(find_hom(EdgeColouredGraph(0, 2, {}), k2(2, 1)) == Mapping{});
    CHECK_FALSE(find_hom(k2(2, 1), EdgeColouredGraph(0, 2, {})).has_value());
    CHECK_THROWS_AS(find_hom(k2(2, 1), k2(3, 1)), std::invalid_argument);
}

TEST_CASE("found homomorphisms preserve colours") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> g_colours(5), h_colours(6);
        for (int& c : g_colours) c = static_cast<int>(rng() % 3) + 1;
        for (int& c : h_colours) c = static_cast<int>(rng() % 3) + 1;
        EdgeColouredGraph g = cycle_graph(3, g_colours);
        EdgeColouredGraph h = cycle_graph(3, h_colours);
        auto f = find_hom(g, h);
        if (!f) continue;
        for (const Edge& e : g.edges())
            CHECK(h.edge_colour((*f)[static_cast<std::size_t>(e.u)],
                                (*f)[static_cast<std::size_t>(e.v)]) == e.colour);
    }
}

TEST_CASE("deciding switchable homomorphisms over Z2") {
    PermGroup z2 = testutil::z2();
    auto yes = decide_switch_hom(cycle_graph(2, {1, 2, 1, 2}), k2(2, 1), z2);
    REQUIRE(yes.has_value());
    CHECK(check_witness(cycle_graph(2, {1, 2, 1, 2}), k2(2, 1), z2, *yes));

    CHECK_FALSE(decide_switch_hom(cycle_graph(2, {1, 1, 1, 2}), k2(2, 1), z2).has_value());

    auto recolour = decide_switch_hom(k2(2, 2), k2(2, 1), z2);
    REQUIRE(recolour.has_value());
    CHECK(check_witness(k2(2, 2), k2(2, 1), z2, *recolour));
}

TEST_CASE("deciding switchable homomorphisms over S3") {
    PermGroup s3 = testutil::s3();
    auto witness = decide_switch_hom(cycle_graph(3, {1, 2, 3}), cycle_graph(3, {1, 1, 1}), s3);
    REQUIRE(witness.has_value());
    CHECK(check_witness(cycle_graph(3, {1, 2, 3}), cycle_graph(3, {1, 1, 1}), s3, *witness));
    for (const Switch& s : witness->sequence) CHECK(s3.contains(s.perm));
}

TEST_CASE("deciding switchable homomorphisms over D4") {
    PermGroup d4 = testutil::d4();
    auto cross_block = decide_switch_hom(k2(4, 1), k2(4, 2), d4);
    REQUIRE(cross_block.has_value());
    CHECK(check_witness(k2(4, 1), k2(4, 2), d4, *cross_block));

    CHECK_FALSE(decide_switch_hom(cycle_graph(4, {1, 1, 1, 2}), k2(4, 1), d4).has_value());
}

TEST_CASE("decisions are stable under switching either side") {
    PermGroup z2 = testutil::z2();
    EdgeColouredGraph g = cycle_graph(2, {1, 1, 1, 2});
    EdgeColouredGraph h = cycle_graph(2, {1, 2, 2, 2});
    bool base = decide_switch_hom(g, h, z2).has_value();
    for (int v = 0; v < 4; ++v) {
        CHECK(decide_switch_hom(switch_vertex(g, v, perm("(1 2)", 2)), h, z2).has_value() ==
              base);
        CHECK(decide_switch_hom(g, switch_vertex(h, v, perm("(1 2)", 2)), z2).has_value() ==
              base);
    }
}

TEST_CASE("witnessed decisions compose") {
    PermGroup z2 = testutil::z2();
    EdgeColouredGraph g = cycle_graph(2, {1, 2, 1, 2});
    EdgeColouredGraph h = cycle_graph(2, {2, 1, 2, 1});
    EdgeColouredGraph t = k2(2, 2);
    auto first = decide_switch_hom(g, h, z2);
    auto second = decide_switch_hom(h, t, z2);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(decide_switch_hom(g, t, z2).has_value());
}

TEST_CASE("witness checking rejects malformed certificates") {
    PermGroup z2 = testutil::z2();
    EdgeColouredGraph g = k2(2, 2);
    EdgeColouredGraph h = k2(2, 1);
    Witness good = *decide_switch_hom(g, h, z2);
    CHECK(check_witness(g, h, z2, good));

    Witness wrong_map = good;
    wrong_map.mapping = {0, 0};
    CHECK_FALSE(check_witness(g, h, z2, wrong_map));

    Witness out_of_range = good;
    out_of_range.mapping = {0, 5};
    CHECK_FALSE(check_witness(g, h, z2, out_of_range));

    Witness short_map = good;
    short_map.mapping = {0};
    CHECK_FALSE(check_witness(g, h, z2, short_map));

    Witness foreign_perm = good;
    foreign_perm.sequence.push_back(Switch{0, Permutation({1, 2})});
    CHECK(check_witness(g, h, z2, foreign_perm));
    foreign_perm.sequence.push_back(Switch{9, perm("(1 2)", 2)});
    CHECK_FALSE(check_witness(g, h, z2, foreign_perm));

    Witness no_switches = good;
    no_switches.sequence.clear();
    CHECK_FALSE(check_witness(g, h, z2, no_switches));

    PermGroup trivial = PermGroup::generate({}, 2);
    CHECK_FALSE(check_witness(g, h, trivial, good));
}

TEST_CASE("witness file round trip") {
    Witness w;
    w.sequence = {{0, perm("(1 2)", 2)}, {3, perm("(1 2)", 2)}};
    w.mapping = {0, 1, 0, 1};
    Witness back = parse_witness(serialize_witness(w), 2);
    CHECK(back.sequence == w.sequence);
    CHECK(back.mapping == w.mapping);
}

TEST_CASE("witness file parsing") {
    Witness w = parse_witness("1 (1 2 3)\n\nmap 0 2\nmap 1 0\n# done\n", 3);
    CHECK(w.sequence == SwitchSequence{{1, perm("(1 2 3)", 3)}});
    CHECK(w.mapping == Mapping{2, 0});

    Witness empty_sequence = parse_witness("\nmap 0 0\n", 2);
    CHECK(empty_sequence.sequence.empty());
    CHECK(empty_sequence.mapping == Mapping{0});

    Witness sparse = parse_witness("\nmap 2 4\n", 2);
    CHECK(sparse.mapping == Mapping{-1, -1, 4});

    CHECK_THROWS_AS(parse_witness("\nmap 0 1\nmap 0 2\n", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_witness("\nmop 0 1\n", 2), std::invalid_argument);
}
