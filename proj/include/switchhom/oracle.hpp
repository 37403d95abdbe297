#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "switchhom/graph.hpp"
#include "switchhom/perm.hpp"

namespace switchhom {

// Brute-force references: exact switch-class enumeration and the literal
// reachability definition of the switchable homomorphism decision. These
// exist to cross-check the structural algorithms, so they stay naive.

class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(std::size_t cap)
        : std::runtime_error("switch-class enumeration exceeds cap of " + std::to_string(cap)) {}
};

constexpr std::size_t default_oracle_cap = 2000000;

// All colour vectors (over the sorted edge list) reachable by switching.
struct SwitchClass {
    std::set<std::vector<int>> colourings;

    bool contains(const std::vector<int>& colours) const { return colourings.count(colours) > 0; }
    std::size_t size() const { return colourings.size(); }
};

SwitchClass enumerate_switch_class(const EdgeColouredGraph& g, const PermGroup& gamma,
                                   std::size_t cap = default_oracle_cap);

// True iff some member of the switch class of g admits a colour-preserving
// homomorphism to h.
bool brute_decide(const EdgeColouredGraph& g, const EdgeColouredGraph& h, const PermGroup& gamma,
                  std::size_t cap = default_oracle_cap);

}  // namespace switchhom
