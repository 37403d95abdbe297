#pragma once

#include <optional>
#include <string>
#include <vector>

#include "switchhom/graph.hpp"
#include "switchhom/perm.hpp"
#include "switchhom/switching.hpp"

namespace switchhom {

// mapping[u] = image of u; colour-preserving on every edge.
using Mapping = std::vector<int>;

// Backtracking search with forward checking over vertices in BFS order,
// candidates ascending; returns the first (hence least in visitation order)
// mapping found.
std::optional<Mapping> find_hom(const EdgeColouredGraph& g, const EdgeColouredGraph& h);

struct Witness {
    SwitchSequence sequence;
    Mapping mapping;
};

// Decides whether some graph switch-equivalent to g maps into h, returning
// a verifiable certificate: apply_sequence(g, sequence) admits mapping as a
// colour-preserving homomorphism to h.
std::optional<Witness> decide_switch_hom(const EdgeColouredGraph& g, const EdgeColouredGraph& h,
                                         const PermGroup& gamma);

// Polynomial-time verifier; malformed witnesses return false, never throw.
bool check_witness(const EdgeColouredGraph& g, const EdgeColouredGraph& h, const PermGroup& gamma,
                   const Witness& w);

// Witness file: switch-sequence lines, a blank line, then "map <u> <x>" lines.
Witness parse_witness(const std::string& text, int degree);
std::string serialize_witness(const Witness& w);

}  // namespace switchhom
