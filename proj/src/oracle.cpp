#include "switchhom/oracle.hpp"

#include <deque>
#include <stdexcept>

#include "switchhom/homomorphism.hpp"

namespace switchhom {

namespace {

// Breadth-first closure over colour vectors; visit() sees each new vector
// once (the start first) and may stop the walk by returning true.
template <typename Visit>
void walk_switch_class(const EdgeColouredGraph& g, const PermGroup& gamma, std::size_t cap,
                       std::set<std::vector<int>>& seen, Visit visit) {
    if (gamma.degree() != g.m())
        throw std::invalid_argument("group degree does not match colour count");
    std::deque<std::vector<int>> queue;
    seen.insert(g.colours());
    if (visit(g.colours())) return;
    queue.push_back(g.colours());
    while (!queue.empty()) {
        std::vector<int> current = std::move(queue.front());
        queue.pop_front();
        for (int v = 0; v < g.n(); ++v) {
            if (g.neighbours(v).empty()) continue;
            for (const Permutation& p : gamma.elements()) {
                if (p.is_identity()) continue;
                std::vector<int> next = current;
                for (auto [w, edge] : g.neighbours(v))
                    next[static_cast<std::size_t>(edge)] =
                        p.apply(next[static_cast<std::size_t>(edge)]);
                if (!seen.insert(next).second) continue;
                if (seen.size() > cap) throw cap_exceeded_error(cap);
                if (visit(next)) return;
                queue.push_back(std::move(next));
            }
        }
    }
}

}  // namespace

SwitchClass enumerate_switch_class(const EdgeColouredGraph& g, const PermGroup& gamma,
                                   std::size_t cap) {
    SwitchClass result;
    walk_switch_class(g, gamma, cap, result.colourings,
                      [](const std::vector<int>&) { return false; });
    return result;
}

bool brute_decide(const EdgeColouredGraph& g, const EdgeColouredGraph& h, const PermGroup& gamma,
                  std::size_t cap) {
    if (g.m() != h.m())
        throw std::invalid_argument("source and target colour counts differ");
    bool found = false;
    std::set<std::vector<int>> seen;
    walk_switch_class(g, gamma, cap, seen, [&](const std::vector<int>& colours) {
        found = find_hom(g.with_colours(colours), h).has_value();
        return found;
    });
    return found;
}

}  // namespace switchhom
