#include "switchhom/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace switchhom {

EdgeColouredGraph::EdgeColouredGraph(int n, int m, std::vector<Edge> edges)
    : n_(n), m_(m), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (m_ < 1) throw std::invalid_argument("colour count must be at least 1");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
        if (e.colour < 1 || e.colour > m_)
            throw std::invalid_argument("edge colour out of range: " + std::to_string(e.colour));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw std::invalid_argument("duplicate edge " + std::to_string(edges_[i].u) + " " +
                                        std::to_string(edges_[i].v));
    adjacency_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        adjacency_[static_cast<std::size_t>(edges_[i].u)].emplace_back(edges_[i].v, static_cast<int>(i));
        adjacency_[static_cast<std::size_t>(edges_[i].v)].emplace_back(edges_[i].u, static_cast<int>(i));
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::optional<int> EdgeColouredGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v, 1};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                               [](const Edge& a, const Edge& b) {
                                   return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                               });
    if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::optional<int> EdgeColouredGraph::edge_colour(int u, int v) const {
    auto idx = edge_index(u, v);
    if (!idx) return std::nullopt;
    return edges_[static_cast<std::size_t>(*idx)].colour;
}

EdgeColouredGraph EdgeColouredGraph::with_colours(std::vector<int> colours) const {
    return with_colours(std::move(colours), m_);
}

EdgeColouredGraph EdgeColouredGraph::with_colours(std::vector<int> colours, int new_m) const {
    if (colours.size() != edges_.size())
        throw std::invalid_argument("colour vector length does not match edge count");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].colour = colours[i];
    return EdgeColouredGraph(n_, new_m, std::move(edges));
}

std::vector<int> EdgeColouredGraph::colours() const {
    std::vector<int> result;
    result.reserve(edges_.size());
    for (const Edge& e : edges_) result.push_back(e.colour);
    return result;
}

bool EdgeColouredGraph::same_underlying_graph(const EdgeColouredGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
    return true;
}

std::vector<int> SpanningStructure::fundamental_cycle(const EdgeColouredGraph& g,
                                                      int cotree_edge) const {
    const Edge& e = g.edges()[static_cast<std::size_t>(cotree_edge)];
    std::vector<int> from_u{e.u};
    std::vector<int> from_v{e.v};
    int a = e.u;
    int b = e.v;
    while (a != b) {
        if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            from_u.push_back(a);
        } else {
            b = parent[static_cast<std::size_t>(b)];
            from_v.push_back(b);
        }
    }
    // from_u = [u, .., meet], from_v = [v, .., meet]; walk meet..u, then v..meet.
    std::vector<int> cycle(from_u.rbegin(), from_u.rend());
    cycle.insert(cycle.end(), from_v.begin(), from_v.end());
    return cycle;
}

GraphStructure structure(const EdgeColouredGraph& g) {
    int n = g.n();
    GraphStructure result;
    result.is_bipartite = true;
    result.side.assign(static_cast<std::size_t>(n), -1);
    SpanningStructure& sp = result.spanning;
    sp.component.assign(static_cast<std::size_t>(n), -1);
    sp.parent.assign(static_cast<std::size_t>(n), -1);
    sp.parent_edge.assign(static_cast<std::size_t>(n), -1);
    sp.depth.assign(static_cast<std::size_t>(n), 0);
    sp.is_tree_edge.assign(g.edge_count(), false);

    for (int root = 0; root < n; ++root) {
        if (sp.component[static_cast<std::size_t>(root)] != -1) continue;
        int comp = static_cast<int>(sp.roots.size());
        sp.roots.push_back(root);
        sp.component[static_cast<std::size_t>(root)] = comp;
        result.side[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (auto [w, edge] : g.neighbours(v)) {
                if (sp.component[static_cast<std::size_t>(w)] == -1) {
                    sp.component[static_cast<std::size_t>(w)] = comp;
                    sp.parent[static_cast<std::size_t>(w)] = v;
                    sp.parent_edge[static_cast<std::size_t>(w)] = edge;
                    sp.depth[static_cast<std::size_t>(w)] = sp.depth[static_cast<std::size_t>(v)] + 1;
                    sp.is_tree_edge[static_cast<std::size_t>(edge)] = true;
                    result.side[static_cast<std::size_t>(w)] =
                        1 - result.side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                }
            }
        }
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!sp.is_tree_edge[i]) sp.cotree_edges.push_back(static_cast<int>(i));

    for (int edge : sp.cotree_edges) {
        const Edge& e = g.edges()[static_cast<std::size_t>(edge)];
        if (result.side[static_cast<std::size_t>(e.u)] ==
            result.side[static_cast<std::size_t>(e.v)]) {
            result.is_bipartite = false;
            result.odd_cycle = sp.fundamental_cycle(g, edge);
            break;
        }
    }
    if (!result.is_bipartite) result.side.clear();
    return result;
}

EdgeColouredGraph abelianize_graph(const EdgeColouredGraph& g, const BlockSystem& b) {
    if (g.m() != b.degree)
        throw std::invalid_argument("block system degree does not match graph colour count");
    std::vector<int> colours = g.colours();
    for (int& c : colours) c = b.label(c);
    return g.with_colours(std::move(colours), b.block_count());
}

EdgeColouredGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int m = 0;
    int n = 0;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::istringstream fields(line);
        if (!have_header) {
            std::string keyword;
            fields >> keyword >> m >> n;
            std::string rest;
            if (keyword != "ecg" || fields.fail() || (fields >> rest))
                fail("expected header 'ecg <m> <n>'");
            if (m < 1) fail("colour count must be at least 1");
            if (n < 0) fail("vertex count must be non-negative");
            have_header = true;
        } else {
            int u, v, c;
            std::string rest;
            fields >> u >> v >> c;
            if (fields.fail() || (fields >> rest)) fail("expected edge '<u> <v> <c>'");
            if (u == v) fail("loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                fail("edge endpoint out of range 0.." + std::to_string(n - 1));
            if (c < 1 || c > m) fail("edge colour out of range 1.." + std::to_string(m));
            if (!seen.insert(std::minmax(u, v)).second)
                fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            edges.push_back(Edge{u, v, c});
        }
    }
    if (!have_header)
        throw std::invalid_argument("graph file is empty");
    return EdgeColouredGraph(n, m, std::move(edges));
}

std::string serialize_graph(const EdgeColouredGraph& g) {
    std::ostringstream out;
    out << "ecg " << g.m() << ' ' << g.n() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.colour << '\n';
    return out.str();
}

}  // namespace switchhom
