#include "switchhom/homomorphism.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "switchhom/switch_graph.hpp"

namespace switchhom {

std::optional<Mapping> find_hom(const EdgeColouredGraph& g, const EdgeColouredGraph& h) {
    if (g.m() != h.m())
        throw std::invalid_argument("source and target colour counts differ");
    int n = g.n();
    if (n == 0) return Mapping{};
    if (h.n() == 0) return std::nullopt;

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = true;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            int v = order[head++];
            for (const auto& nb : g.neighbours(v))
                if (!seen[static_cast<std::size_t>(nb.first)]) {
                    seen[static_cast<std::size_t>(nb.first)] = true;
                    order.push_back(nb.first);
                }
        }
    }

    // target_has[x][c - 1]: x has an incident edge of colour c.
    std::vector<std::vector<char>> target_has(
        static_cast<std::size_t>(h.n()), std::vector<char>(static_cast<std::size_t>(h.m()), 0));
    for (const Edge& e : h.edges()) {
        target_has[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.colour - 1)] = 1;
        target_has[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.colour - 1)] = 1;
    }

    // domain[v][x]: x is still a feasible image of v given current assignments.
    std::vector<std::vector<char>> domain(
        static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(h.n()), 1));
    std::vector<int> domain_size(static_cast<std::size_t>(n), h.n());
    for (int v = 0; v < n; ++v)
        for (auto [w, edge] : g.neighbours(v)) {
            int c = g.edges()[static_cast<std::size_t>(edge)].colour;
            for (int x = 0; x < h.n(); ++x)
                if (domain[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] &&
                    !target_has[static_cast<std::size_t>(x)][static_cast<std::size_t>(c - 1)]) {
                    domain[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] = 0;
                    --domain_size[static_cast<std::size_t>(v)];
                }
            if (domain_size[static_cast<std::size_t>(v)] == 0) return std::nullopt;
        }

    Mapping f(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> trail;
    auto prune = [&](int w, int x) {
        domain[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)] = 0;
        --domain_size[static_cast<std::size_t>(w)];
        trail.emplace_back(w, x);
    };

    // Forward checking: assigning v narrows every unassigned neighbour to the
    // colour-compatible neighbourhood of the image, so a candidate surviving
    // in domain[v] is already consistent with all assigned neighbours.
    auto assign = [&](auto&& self, std::size_t t) -> bool {
        if (t == order.size()) return true;
        int v = order[t];
        for (int x = 0; x < h.n(); ++x) {
            if (!domain[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)]) continue;
            std::size_t mark = trail.size();
            bool viable = true;
            for (auto [w, edge] : g.neighbours(v)) {
                if (f[static_cast<std::size_t>(w)] >= 0) continue;
                int c = g.edges()[static_cast<std::size_t>(edge)].colour;
                for (int y = 0; y < h.n(); ++y) {
                    if (!domain[static_cast<std::size_t>(w)][static_cast<std::size_t>(y)]) continue;
                    auto colour = h.edge_colour(x, y);
                    if (!colour || *colour != c) prune(w, y);
                }
                if (domain_size[static_cast<std::size_t>(w)] == 0) {
                    viable = false;
                    break;
                }
            }
            if (viable) {
                f[static_cast<std::size_t>(v)] = x;
                if (self(self, t + 1)) return true;
                f[static_cast<std::size_t>(v)] = -1;
            }
            while (trail.size() > mark) {
                auto [w, y] = trail.back();
                trail.pop_back();
                domain[static_cast<std::size_t>(w)][static_cast<std::size_t>(y)] = 1;
                ++domain_size[static_cast<std::size_t>(w)];
            }
        }
        return false;
    };
    if (assign(assign, 0)) return f;
    return std::nullopt;
}

std::optional<Witness> decide_switch_hom(const EdgeColouredGraph& g, const EdgeColouredGraph& h,
                                         const PermGroup& gamma) {
    if (g.m() != h.m() || gamma.degree() != g.m())
        throw std::invalid_argument("group degree does not match colour count");
    if (!gamma.is_transitive())
        throw std::invalid_argument("group must be transitive here");

    Abelianization ab = abelianization(gamma);
    EdgeColouredGraph ga = abelianize_graph(g, ab.blocks);
    EdgeColouredGraph ha = abelianize_graph(h, ab.blocks);
    SwitchGraph sw = build_switch_graph(ha, ab.quotient);
    auto f = find_hom(ga, sw.product);
    if (!f) return std::nullopt;

    // f sends u to (x, pi'); switching u by the inverse of pi' and mapping
    // u to x is colour-preserving at the Abelianized level, and a coset
    // representative of that inverse realizes the right blocks at the
    // original level, up to per-edge commutator repairs.
    Witness w;
    w.mapping.resize(static_cast<std::size_t>(g.n()));
    EdgeColouredGraph current = g;
    for (int u = 0; u < g.n(); ++u) {
        auto [x, r] = sw.label((*f)[static_cast<std::size_t>(u)]);
        w.mapping[static_cast<std::size_t>(u)] = x;
        Permutation lift = ab.representative_of(ab.quotient.element(r).inverse());
        if (lift.is_identity()) continue;
        w.sequence.push_back(Switch{u, lift});
        current = switch_vertex(current, u, lift);
    }
    std::optional<CommutatorWords> words;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ce = current.edges()[e];
        auto target = h.edge_colour(w.mapping[static_cast<std::size_t>(ce.u)],
                                    w.mapping[static_cast<std::size_t>(ce.v)]);
        if (!target)
            throw std::logic_error("image of an edge is not an edge after lifting");
        if (ce.colour == *target) continue;
        if (!words) words.emplace(gamma);
        const Permutation* tau = nullptr;
        for (const Permutation& t : words->derived().elements())
            if (t.apply(ce.colour) == *target) {
                tau = &t;
                break;
            }
        if (tau == nullptr)
            throw std::logic_error("lifting failed: colours not in one block after switching");
        auto [repaired, repair] = single_edge_recolour(current, ce.u, ce.v, *tau, *words);
        current = std::move(repaired);
        w.sequence.insert(w.sequence.end(), repair.begin(), repair.end());
    }
    if (!check_witness(g, h, gamma, w))
        throw std::logic_error("constructed witness fails verification");
    return w;
}

bool check_witness(const EdgeColouredGraph& g, const EdgeColouredGraph& h, const PermGroup& gamma,
                   const Witness& w) {
    try {
        if (g.m() != h.m() || gamma.degree() != g.m()) return false;
        if (w.mapping.size() != static_cast<std::size_t>(g.n())) return false;
        for (const Switch& s : w.sequence) {
            if (s.vertex < 0 || s.vertex >= g.n()) return false;
            if (s.perm.degree() != g.m() || !gamma.contains(s.perm)) return false;
        }
        for (int x : w.mapping)
            if (x < 0 || x >= h.n()) return false;
        EdgeColouredGraph switched = apply_sequence(g, w.sequence);
        for (const Edge& e : switched.edges()) {
            auto colour = h.edge_colour(w.mapping[static_cast<std::size_t>(e.u)],
                                        w.mapping[static_cast<std::size_t>(e.v)]);
            if (!colour || *colour != e.colour) return false;
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

Witness parse_witness(const std::string& text, int degree) {
    std::istringstream in(text);
    std::string line;
    std::string head;
    int line_no = 0;
    bool in_map = false;
    Witness w;
    while (std::getline(in, line)) {
        ++line_no;
        if (!in_map) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                in_map = true;
                continue;
            }
            head += line;
            head += '\n';
            continue;
        }
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::istringstream fields(line);
        std::string keyword;
        int u, x;
        std::string rest;
        fields >> keyword >> u >> x;
        if (keyword != "map" || fields.fail() || (fields >> rest) || u < 0)
            throw std::invalid_argument("witness map line " + std::to_string(line_no) +
                                        ": expected 'map <u> <x>'");
        if (static_cast<std::size_t>(u) >= w.mapping.size())
            w.mapping.resize(static_cast<std::size_t>(u) + 1, -1);
        if (w.mapping[static_cast<std::size_t>(u)] != -1)
            throw std::invalid_argument("witness maps vertex " + std::to_string(u) + " twice");
        w.mapping[static_cast<std::size_t>(u)] = x;
    }
    w.sequence = parse_sequence(head, degree);
    return w;
}

std::string serialize_witness(const Witness& w) {
    std::ostringstream out;
    out << serialize_sequence(w.sequence) << '\n';
    for (std::size_t u = 0; u < w.mapping.size(); ++u)
        out << "map " << u << ' ' << w.mapping[u] << '\n';
    return out.str();
}

}  // namespace switchhom
