#pragma once

#include <string>
#include <utility>
#include <vector>

#include "switchhom/graph.hpp"
#include "switchhom/perm.hpp"

namespace testutil {

using switchhom::Edge;
using switchhom::EdgeColouredGraph;
using switchhom::Permutation;
using switchhom::PermGroup;

inline Permutation perm(const std::string& cycles, int degree) {
    return Permutation::from_cycles(cycles, degree);
}

inline PermGroup z2() { return PermGroup::generate({perm("(1 2)", 2)}, 2); }
inline PermGroup c3() { return PermGroup::generate({perm("(1 2 3)", 3)}, 3); }
inline PermGroup c4() { return PermGroup::generate({perm("(1 2 3 4)", 4)}, 4); }
inline PermGroup klein4() {
    return PermGroup::generate({perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)}, 4);
}
inline PermGroup c6() { return PermGroup::generate({perm("(1 2 3 4 5 6)", 6)}, 6); }
inline PermGroup s3() { return PermGroup::generate({perm("(1 2 3)", 3), perm("(1 2)", 3)}, 3); }
inline PermGroup d4() { return PermGroup::generate({perm("(1 2 3 4)", 4), perm("(1 3)", 4)}, 4); }

// The cycle v0 v1 .. v_{L-1} v0; colours[t] belongs to the edge v_t v_{t+1},
// the last entry to the closing edge.
inline EdgeColouredGraph cycle_graph(int m, const std::vector<int>& colours) {
    const int length = static_cast<int>(colours.size());
    std::vector<Edge> edges;
    for (int t = 0; t < length; ++t) {
        int u = t;
        int v = (t + 1) % length;
        if (u > v) std::swap(u, v);
        edges.push_back(Edge{u, v, colours[t]});
    }
    return EdgeColouredGraph(length, m, std::move(edges));
}

// The path v0 v1 .. v_L; colours[t] belongs to the edge v_t v_{t+1}.
inline EdgeColouredGraph path_graph(int m, const std::vector<int>& colours) {
    std::vector<Edge> edges;
    for (int t = 0; t < static_cast<int>(colours.size()); ++t)
        edges.push_back(Edge{t, t + 1, colours[t]});
    return EdgeColouredGraph(static_cast<int>(colours.size()) + 1, m, std::move(edges));
}

inline EdgeColouredGraph k2(int m, int colour) {
    return EdgeColouredGraph(2, m, {Edge{0, 1, colour}});
}

}  // namespace testutil
