#include "switchhom/switching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace switchhom {

namespace {

void require_abelian_transitive(const PermGroup& gamma) {
    if (!gamma.is_abelian())
        throw std::invalid_argument("group must be Abelian here");
    if (!gamma.is_transitive())
        throw std::invalid_argument("group must be transitive here");
}

// The unique element of a regular group mapping x to y.
const Permutation& regular_map(const PermGroup& g, int x, int y) {
    for (const Permutation& p : g.elements())
        if (p.apply(x) == y) return p;
    throw std::invalid_argument("no group element maps " + std::to_string(x) + " to " +
                                std::to_string(y));
}

// Vertices of one component in BFS discovery order (parents precede children).
std::vector<int> component_order(const SpanningStructure& sp, int comp) {
    std::vector<int> vertices;
    for (int v = 0; v < static_cast<int>(sp.component.size()); ++v)
        if (sp.component[static_cast<std::size_t>(v)] == comp) vertices.push_back(v);
    std::stable_sort(vertices.begin(), vertices.end(), [&](int a, int b) {
        return sp.depth[static_cast<std::size_t>(a)] < sp.depth[static_cast<std::size_t>(b)];
    });
    return vertices;
}

SwitchSequence assignment_to_sequence(const std::vector<Permutation>& sigma) {
    SwitchSequence result;
    for (std::size_t v = 0; v < sigma.size(); ++v)
        if (!sigma[v].is_identity()) result.push_back(Switch{static_cast<int>(v), sigma[v]});
    return result;
}

}  // namespace

EdgeColouredGraph switch_vertex(const EdgeColouredGraph& g, int v, const Permutation& pi) {
    if (v < 0 || v >= g.n())
        throw std::invalid_argument("switch vertex out of range: " + std::to_string(v));
    if (pi.degree() != g.m())
        throw std::invalid_argument("switch permutation degree does not match colour count");
    std::vector<int> colours = g.colours();
    for (auto [w, edge] : g.neighbours(v)) colours[static_cast<std::size_t>(edge)] =
        pi.apply(colours[static_cast<std::size_t>(edge)]);
    return g.with_colours(std::move(colours));
}

EdgeColouredGraph apply_sequence(const EdgeColouredGraph& g, const SwitchSequence& sigma) {
    EdgeColouredGraph result = g;
    for (const Switch& s : sigma) result = switch_vertex(result, s.vertex, s.perm);
    return result;
}

SwitchSequence inverse_sequence(const SwitchSequence& sigma) {
    SwitchSequence result;
    result.reserve(sigma.size());
    for (auto it = sigma.rbegin(); it != sigma.rend(); ++it)
        result.push_back(Switch{it->vertex, it->perm.inverse()});
    return result;
}

SwitchSequence parse_sequence(const std::string& text, int degree) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    SwitchSequence result;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::istringstream fields(line);
        int vertex;
        fields >> vertex;
        std::string cycles;
        std::getline(fields, cycles);
        if (fields.fail())
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected '<vertex> <permutation>'");
        result.push_back(Switch{vertex, Permutation::from_cycles(cycles, degree)});
    }
    return result;
}

std::string serialize_sequence(const SwitchSequence& sigma) {
    std::ostringstream out;
    for (const Switch& s : sigma) out << s.vertex << ' ' << s.perm.to_cycles() << '\n';
    return out.str();
}

CycleClass classify_cycle(const EdgeColouredGraph& cycle, const PermGroup& gamma) {
    require_abelian_transitive(gamma);
    if (gamma.degree() != cycle.m())
        throw std::invalid_argument("group degree does not match colour count");
    int n = cycle.n();
    if (n < 3 || cycle.edge_count() != static_cast<std::size_t>(n))
        throw std::invalid_argument("input is not a cycle");
    for (int v = 0; v < n; ++v)
        if (cycle.neighbours(v).size() != 2)
            throw std::invalid_argument("input is not a cycle: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(cycle.neighbours(v).size()));

    // Cyclic order v_0 .. v_{n-1} starting at vertex 0 towards its smaller
    // neighbour; a full walk also confirms connectivity.
    std::vector<int> order{0, cycle.neighbours(0).front().first};
    while (true) {
        int prev = order[order.size() - 2];
        int cur = order.back();
        auto nbrs = cycle.neighbours(cur);
        int next = nbrs.front().first == prev ? nbrs[1].first : nbrs.front().first;
        if (next == 0) break;
        order.push_back(next);
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("input is not a cycle: multiple components");

    // Fix the switch at v_0 to the identity and choose the unique element at
    // each later vertex making the path edge before it colour 1.
    std::vector<Permutation> sigma(static_cast<std::size_t>(n), gamma.identity());
    for (int s = 0; s + 1 < n; ++s) {
        int i = *cycle.edge_colour(order[static_cast<std::size_t>(s)],
                                   order[static_cast<std::size_t>(s + 1)]);
        sigma[static_cast<std::size_t>(s + 1)] =
            regular_map(gamma, sigma[static_cast<std::size_t>(s)].apply(i), 1);
    }
    int closing = sigma[static_cast<std::size_t>(n - 1)].apply(
        *cycle.edge_colour(order[static_cast<std::size_t>(n - 1)], order[0]));

    CycleClass result;
    if (n % 2 == 0) {
        result.kind = closing == 1 ? CycleKind::MONO_EVEN : CycleKind::NEARLY_MONO_EVEN;
        result.colour = closing;
    } else {
        // Odd length: switching every odd-position vertex by the element
        // taking 1 to the closing colour recolours exactly the path edges.
        result.kind = CycleKind::MONO_ODD;
        result.colour = closing;
        const Permutation& rho = regular_map(gamma, 1, closing);
        for (int s = 1; s < n; s += 2)
            sigma[static_cast<std::size_t>(s)] = rho * sigma[static_cast<std::size_t>(s)];
    }
    for (int s = 1; s < n; ++s)
        if (!sigma[static_cast<std::size_t>(s)].is_identity())
            result.normalization.push_back(
                Switch{order[static_cast<std::size_t>(s)], sigma[static_cast<std::size_t>(s)]});
    return result;
}

std::optional<SwitchSequence> switch_to_colour(const EdgeColouredGraph& g,
                                               const PermGroup& gamma_ab, int colour) {
    require_abelian_transitive(gamma_ab);
    if (gamma_ab.degree() != g.m())
        throw std::invalid_argument("group degree does not match colour count");
    if (colour < 1 || colour > g.m())
        throw std::invalid_argument("target colour out of range");

    GraphStructure st = structure(g);
    const SpanningStructure& sp = st.spanning;
    std::vector<Permutation> sigma(static_cast<std::size_t>(g.n()), gamma_ab.identity());
    for (int comp = 0; comp < static_cast<int>(sp.roots.size()); ++comp) {
        std::vector<int> vertices = component_order(sp, comp);
        bool solved = false;
        // Regularity pins every non-root switch once the root's is chosen,
        // so trying each root element is an exhaustive search.
        for (const Permutation& root_choice : gamma_ab.elements()) {
            sigma[static_cast<std::size_t>(vertices.front())] = root_choice;
            for (std::size_t k = 1; k < vertices.size(); ++k) {
                int v = vertices[k];
                int p = sp.parent[static_cast<std::size_t>(v)];
                int i = g.edges()[static_cast<std::size_t>(sp.parent_edge[static_cast<std::size_t>(v)])].colour;
                sigma[static_cast<std::size_t>(v)] =
                    regular_map(gamma_ab, sigma[static_cast<std::size_t>(p)].apply(i), colour);
            }
            bool ok = true;
            for (const Edge& e : g.edges()) {
                if (sp.component[static_cast<std::size_t>(e.u)] != comp) continue;
                if (sigma[static_cast<std::size_t>(e.u)].apply(
                        sigma[static_cast<std::size_t>(e.v)].apply(e.colour)) != colour) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                solved = true;
                break;
            }
        }
        if (!solved) return std::nullopt;
    }
    return assignment_to_sequence(sigma);
}

std::optional<MonoResult> can_switch_monochromatic(const EdgeColouredGraph& g,
                                                   const PermGroup& gamma_ab) {
    for (int colour = 1; colour <= g.m(); ++colour)
        if (auto sequence = switch_to_colour(g, gamma_ab, colour))
            return MonoResult{colour, std::move(*sequence)};
    return std::nullopt;
}

CommutatorWords::CommutatorWords(const PermGroup& g)
    : group_(g), derived_(commutator_subgroup(g)) {
    std::map<Permutation, std::pair<Permutation, Permutation>> generator_pairs;
    for (const Permutation& a : group_.elements())
        for (const Permutation& b : group_.elements()) {
            Permutation c = commutator(a, b);
            if (!c.is_identity()) generator_pairs.try_emplace(std::move(c), a, b);
        }
    words_.resize(derived_.order());
    std::vector<bool> known(derived_.order(), false);
    std::deque<std::size_t> queue{derived_.index_of(derived_.identity())};
    known[queue.front()] = true;
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        for (const auto& [gen, pair] : generator_pairs) {
            std::size_t to = derived_.index_of(derived_.element(at) * gen);
            if (known[to]) continue;
            known[to] = true;
            words_[to] = words_[at];
            words_[to].push_back(pair);
            max_word_length_ = std::max(max_word_length_, static_cast<int>(words_[to].size()));
            queue.push_back(to);
        }
    }
}

const std::vector<std::pair<Permutation, Permutation>>& CommutatorWords::word_for(
    const Permutation& tau) const {
    return words_[derived_.index_of(tau)];
}

std::pair<EdgeColouredGraph, SwitchSequence> single_edge_recolour(const EdgeColouredGraph& g,
                                                                  int u, int w,
                                                                  const Permutation& tau,
                                                                  const CommutatorWords& words) {
    if (!g.edge_index(u, w))
        throw std::invalid_argument("no edge between " + std::to_string(u) + " and " +
                                    std::to_string(w));
    const auto& word = words.word_for(tau);
    // Inner factors first: after the whole sequence the colour of uw has been
    // acted on by [p1,f1][p2,f2]...[pk,fk] = tau, and the switches at u alone
    // (and w alone) cancel pairwise on every other edge.
    SwitchSequence sigma;
    sigma.reserve(4 * word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto& [pi, phi] = *it;
        sigma.push_back(Switch{w, phi.inverse()});
        sigma.push_back(Switch{u, pi.inverse()});
        sigma.push_back(Switch{w, phi});
        sigma.push_back(Switch{u, pi});
    }
    return {apply_sequence(g, sigma), std::move(sigma)};
}

std::pair<EdgeColouredGraph, SwitchSequence> single_edge_recolour(const EdgeColouredGraph& g,
                                                                  int u, int w,
                                                                  const Permutation& tau,
                                                                  const PermGroup& gamma) {
    return single_edge_recolour(g, u, w, tau, CommutatorWords(gamma));
}

std::optional<std::vector<Permutation>> abelian_switch_assignment(const EdgeColouredGraph& g,
                                                                  const EdgeColouredGraph& h,
                                                                  const PermGroup& gamma) {
    require_abelian_transitive(gamma);
    if (!g.same_underlying_graph(h))
        throw std::invalid_argument("graphs do not share an underlying graph");
    if (g.m() != h.m() || gamma.degree() != g.m())
        throw std::invalid_argument("group degree does not match colour count");

    GraphStructure st = structure(g);
    const SpanningStructure& sp = st.spanning;
    std::vector<Permutation> sigma(static_cast<std::size_t>(g.n()), gamma.identity());
    for (int comp = 0; comp < static_cast<int>(sp.roots.size()); ++comp) {
        std::vector<int> vertices = component_order(sp, comp);
        bool solved = false;
        for (const Permutation& root_choice : gamma.elements()) {
            sigma[static_cast<std::size_t>(vertices.front())] = root_choice;
            for (std::size_t k = 1; k < vertices.size(); ++k) {
                int v = vertices[k];
                int p = sp.parent[static_cast<std::size_t>(v)];
                int edge = sp.parent_edge[static_cast<std::size_t>(v)];
                sigma[static_cast<std::size_t>(v)] = regular_map(
                    gamma,
                    sigma[static_cast<std::size_t>(p)].apply(g.edges()[static_cast<std::size_t>(edge)].colour),
                    h.edges()[static_cast<std::size_t>(edge)].colour);
            }
            bool ok = true;
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                const Edge& ge = g.edges()[e];
                if (sp.component[static_cast<std::size_t>(ge.u)] != comp) continue;
                if (sigma[static_cast<std::size_t>(ge.u)].apply(
                        sigma[static_cast<std::size_t>(ge.v)].apply(ge.colour)) !=
                    h.edges()[e].colour) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                solved = true;
                break;
            }
        }
        if (!solved) return std::nullopt;
    }
    return sigma;
}

std::optional<SwitchSequence> switch_equivalent(const EdgeColouredGraph& g,
                                                const EdgeColouredGraph& h,
                                                const PermGroup& gamma) {
    if (!g.same_underlying_graph(h))
        throw std::invalid_argument("graphs do not share an underlying graph");
    if (g.m() != h.m() || gamma.degree() != g.m())
        throw std::invalid_argument("group degree does not match colour count");
    if (!gamma.is_transitive())
        throw std::invalid_argument("group must be transitive here");

    if (gamma.is_abelian()) {
        auto sigma = abelian_switch_assignment(g, h, gamma);
        if (!sigma) return std::nullopt;
        return assignment_to_sequence(*sigma);
    }

    Abelianization ab = abelianization(gamma);
    EdgeColouredGraph ga = abelianize_graph(g, ab.blocks);
    EdgeColouredGraph ha = abelianize_graph(h, ab.blocks);
    auto quotient_sigma = abelian_switch_assignment(ga, ha, ab.quotient);
    if (!quotient_sigma) return std::nullopt;

    // Lift: apply one coset representative per vertex, then repair each edge
    // inside its block with commutator switches.
    SwitchSequence sigma;
    EdgeColouredGraph current = g;
    for (int v = 0; v < g.n(); ++v) {
        Permutation rep = ab.representative_of((*quotient_sigma)[static_cast<std::size_t>(v)]);
        if (rep.is_identity()) continue;
        sigma.push_back(Switch{v, rep});
        current = switch_vertex(current, v, rep);
    }
    CommutatorWords words(gamma);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ce = current.edges()[e];
        int target = h.edges()[e].colour;
        if (ce.colour == target) continue;
        const Permutation* tau = nullptr;
        for (const Permutation& t : words.derived().elements())
            if (t.apply(ce.colour) == target) {
                tau = &t;
                break;
            }
        if (tau == nullptr)
            throw std::logic_error("lifting failed: colours not in one block after switching");
        auto [repaired, repair] = single_edge_recolour(current, ce.u, ce.v, *tau, words);
        current = std::move(repaired);
        sigma.insert(sigma.end(), repair.begin(), repair.end());
    }
    if (!(current == h))
        throw std::logic_error("lifting failed to reproduce the target colouring");
    return sigma;
}

}  // namespace switchhom
