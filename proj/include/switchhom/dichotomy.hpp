#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "switchhom/graph.hpp"
#include "switchhom/homomorphism.hpp"
#include "switchhom/perm.hpp"
#include "switchhom/switch_graph.hpp"
#include "switchhom/switching.hpp"

namespace switchhom {

enum class VerdictKind { POLYNOMIAL, NP_COMPLETE };
enum class PolynomialReason { EDGELESS, MONO_BIPARTITE };
enum class CertificateKind { ODD_CYCLE, NEARLY_MONO_EVEN_CYCLE };

struct Certificate {
    CertificateKind kind;
    // ODD_CYCLE: a closed odd cycle in the target itself.
    // NEARLY_MONO_EVEN_CYCLE: a closed even cycle in the Abelianized target;
    // after applying switches, its edges all have block colour colour_k
    // except the co-tree edge at colour_l.
    std::vector<int> cycle;
    int cotree_u = -1;
    int cotree_v = -1;
    int colour_k = 0;
    int colour_l = 0;
    SwitchSequence switches;
};

struct Verdict {
    VerdictKind kind;
    PolynomialReason reason = PolynomialReason::EDGELESS;
    // MONO_BIPARTITE: the block colour reached and a sequence turning the
    // Abelianized target monochromatic, verifiable by replay.
    int mono_colour = 0;
    SwitchSequence mono_sequence;
    std::optional<Certificate> certificate;
};

Verdict classify_target(const EdgeColouredGraph& h, const PermGroup& gamma);

// Polynomial solver for the single-edge target of the given colour: decides
// whether g maps into K2 of that colour after switching, with a full witness.
std::optional<Witness> solve_mono_bipartite_target(const EdgeColouredGraph& g,
                                                   const PermGroup& gamma, int colour);
// Same, driven by a classification of the intended target; anything other
// than POLYNOMIAL(mono-bipartite) is rejected.
std::optional<Witness> solve_mono_bipartite_target(const EdgeColouredGraph& g,
                                                   const PermGroup& gamma,
                                                   const Verdict& verdict);

struct IndicatorDigraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted, deduplicated
    // Vertices lying in a component of the base graph with at least one
    // edge; only these are consulted by the smoothness check.
    std::vector<bool> active;

    bool has_arc(int x, int y) const;
};

// Arcs x -> y whenever some z makes xz an edge of colour i and zy an edge
// of colour j. Loops can arise only for i = j and are retained.
IndicatorDigraph indicator_construction(const EdgeColouredGraph& s, int i, int j);

// Digraph file: first line "digraph <n>", then one "<x> <y>" arc per line.
std::string serialize_digraph(const IndicatorDigraph& d);

struct PeriodReport {
    bool is_smooth;
    // gcd of directed cycle lengths per strongly connected component with at
    // least one internal arc, ordered by smallest member vertex.
    std::vector<int> periods;
    bool has_coprime_cycles;  // some period equals 1
};

PeriodReport smooth_and_periods(const IndicatorDigraph& d);

struct Theorem7Cycles {
    int colour_i = 0;
    int colour_j = 0;
    int d = 0;  // order of pi
    int k = 0;  // half the base cycle length
    // Open vertex lists of the two alternating cycles in the switch graph;
    // c1 has 2d vertices and c2 has 2d(k-1)+2.
    std::vector<std::pair<int, Permutation>> c1;
    std::vector<std::pair<int, Permutation>> c2;
};

// The two alternating cycles witnessing hardness, built inside the switch
// graph of h over the powers of pi; both are verified against the
// materialized switch graph before being returned. The cycle argument lists
// v_0 .. v_{2k-1} with every consecutive edge of colour i = colour(v_0 v_1)
// and the closing edge v_0 v_{2k-1} of colour j = pi(i).
Theorem7Cycles build_theorem7_cycles(const EdgeColouredGraph& h_nearly_mono,
                                     const PermGroup& gamma, const Permutation& pi,
                                     const std::vector<int>& cycle);

struct Theorem7Report {
    Certificate certificate;
    EdgeColouredGraph switched_target;  // Abelianized target after the certificate switches
    Theorem7Cycles cycles;
    SwitchGraph switch_graph;  // of switched_target
    IndicatorDigraph indicator;
    PeriodReport periods;
};

// End-to-end hardness analysis of a target whose classification yields a
// nearly-monochromatic certificate; other targets are rejected.
Theorem7Report theorem7_report(const EdgeColouredGraph& h, const PermGroup& gamma);

}  // namespace switchhom
