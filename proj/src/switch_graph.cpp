#include "switchhom/switch_graph.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace switchhom {

SwitchGraph build_switch_graph(const EdgeColouredGraph& h, const PermGroup& gamma) {
    if (!gamma.is_abelian())
        throw std::invalid_argument("switch graph is defined for Abelian groups only");
    if (gamma.degree() != h.m())
        throw std::invalid_argument("group degree does not match colour count");

    int order = static_cast<int>(gamma.order());
    std::vector<Edge> edges;
    edges.reserve(h.edge_count() * static_cast<std::size_t>(order) *
                  static_cast<std::size_t>(order));
    for (const Edge& e : h.edges())
        for (int r = 0; r < order; ++r)
            for (int s = 0; s < order; ++s)
                edges.push_back(Edge{e.u * order + r, e.v * order + s,
                                     gamma.element(static_cast<std::size_t>(r))
                                         .apply(gamma.element(static_cast<std::size_t>(s))
                                                    .apply(e.colour))});
    EdgeColouredGraph product(h.n() * order, h.m(), std::move(edges));
    return SwitchGraph{h, gamma, std::move(product)};
}

std::string serialize_switch_graph(const SwitchGraph& sw) {
    std::ostringstream out;
    for (int flat = 0; flat < sw.product.n(); ++flat) {
        auto [vertex, index] = sw.label(flat);
        out << "# " << flat << " = (" << vertex << ", " << sw.group.element(index).to_cycles()
            << ")\n";
    }
    out << serialize_graph(sw.product);
    return out.str();
}

}  // namespace switchhom
