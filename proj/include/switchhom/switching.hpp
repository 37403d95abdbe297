#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "switchhom/graph.hpp"
#include "switchhom/perm.hpp"

namespace switchhom {

struct Switch {
    int vertex;
    Permutation perm;

    friend bool operator==(const Switch&, const Switch&) = default;
};

// Applied left-to-right: the first listed switch is applied first.
using SwitchSequence = std::vector<Switch>;

EdgeColouredGraph switch_vertex(const EdgeColouredGraph& g, int v, const Permutation& pi);
EdgeColouredGraph apply_sequence(const EdgeColouredGraph& g, const SwitchSequence& sigma);

// Undoes sigma: the reversed sequence with inverted permutations.
SwitchSequence inverse_sequence(const SwitchSequence& sigma);

// Switch-sequence file: one "<vertex> <permutation>" per line, applied top
// to bottom; '#' comments and blank lines ignored.
SwitchSequence parse_sequence(const std::string& text, int degree);
std::string serialize_sequence(const SwitchSequence& sigma);

enum class CycleKind { MONO_EVEN, NEARLY_MONO_EVEN, MONO_ODD };

struct CycleClass {
    CycleKind kind;
    // MONO_EVEN: 1 (any colour is then reachable); NEARLY_MONO_EVEN: the
    // colour j of the closing edge in the (1, j) normal form; MONO_ODD:
    // the monochromatic colour achieved by the normalization.
    int colour;
    // Reaches the normal form: all edges colour 1, all edges colour 1 except
    // the closing edge at j, or all edges colour j, by kind.
    SwitchSequence normalization;
};

// Requires the underlying graph to be one cycle and gamma Abelian transitive.
CycleClass classify_cycle(const EdgeColouredGraph& cycle, const PermGroup& gamma);

struct MonoResult {
    int colour;
    SwitchSequence sequence;
};

// Smallest colour c such that g switches to all edges colour c under an
// Abelian transitive group, with a realizing sequence; absent if none.
std::optional<MonoResult> can_switch_monochromatic(const EdgeColouredGraph& g,
                                                   const PermGroup& gamma_ab);
// Same decision for one fixed target colour.
std::optional<SwitchSequence> switch_to_colour(const EdgeColouredGraph& g,
                                               const PermGroup& gamma_ab, int colour);

// Factorizations of every commutator-subgroup element into products of
// single commutators [pi, phi], shortest-first by breadth-first search.
class CommutatorWords {
public:
    explicit CommutatorWords(const PermGroup& g);

    const PermGroup& group() const { return group_; }
    const PermGroup& derived() const { return derived_; }
    // The word for tau: ordered pairs whose product [p1,f1]...[pk,fk] is tau.
    const std::vector<std::pair<Permutation, Permutation>>& word_for(const Permutation& tau) const;
    // K: the longest word over all commutator-subgroup elements.
    int max_word_length() const { return max_word_length_; }

private:
    PermGroup group_;
    PermGroup derived_;
    std::vector<std::vector<std::pair<Permutation, Permutation>>> words_;
    int max_word_length_ = 0;
};

// Recolours the edge uw from colour i to tau(i) and changes nothing else,
// using 4k switches at u and w (k = factorization length of tau).
std::pair<EdgeColouredGraph, SwitchSequence> single_edge_recolour(const EdgeColouredGraph& g,
                                                                  int u, int w,
                                                                  const Permutation& tau,
                                                                  const CommutatorWords& words);
std::pair<EdgeColouredGraph, SwitchSequence> single_edge_recolour(const EdgeColouredGraph& g,
                                                                  int u, int w,
                                                                  const Permutation& tau,
                                                                  const PermGroup& gamma);

// A sequence turning g into h exactly, if one exists. Abelian groups are
// solved by spanning-tree propagation; other groups are decided on the
// Abelianized graphs and lifted with per-edge commutator repairs.
std::optional<SwitchSequence> switch_equivalent(const EdgeColouredGraph& g,
                                                const EdgeColouredGraph& h,
                                                const PermGroup& gamma);

// Per-vertex solution of the Abelian case, identity entries included;
// exposed for the lifting step of the general case.
std::optional<std::vector<Permutation>> abelian_switch_assignment(const EdgeColouredGraph& g,
                                                                  const EdgeColouredGraph& h,
                                                                  const PermGroup& gamma);

}  // namespace switchhom
