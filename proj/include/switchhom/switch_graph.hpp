#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "switchhom/graph.hpp"
#include "switchhom/perm.hpp"

namespace switchhom {

// The product graph on V(H) x Gamma in which a base edge uv of colour i
// yields, for every pair of group elements (r, s), the edge (u,r)(v,s) of
// colour r(s(i)). Defined for Abelian groups only, where that colour does
// not depend on the orientation.
struct SwitchGraph {
    EdgeColouredGraph base;
    PermGroup group;
    EdgeColouredGraph product;

    int flat_id(int vertex, std::size_t element_index) const {
        return vertex * static_cast<int>(group.order()) + static_cast<int>(element_index);
    }
    std::pair<int, std::size_t> label(int flat) const {
        return {flat / static_cast<int>(group.order()),
                static_cast<std::size_t>(flat % static_cast<int>(group.order()))};
    }
};

SwitchGraph build_switch_graph(const EdgeColouredGraph& h, const PermGroup& gamma);

// The product in ecg form, preceded by comment lines mapping each flat id
// to its (vertex, element) label.
std::string serialize_switch_graph(const SwitchGraph& sw);

}  // namespace switchhom
