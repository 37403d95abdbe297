#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "switchhom/perm.hpp"

namespace switchhom {

struct Edge {
    int u;  // u < v
    int v;
    int colour;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
};

// A simple graph on vertices 0..n-1 whose every edge carries a colour
// from {1..m}. Edges are kept sorted by (u, v).
class EdgeColouredGraph {
public:
    EdgeColouredGraph(int n, int m, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Neighbours of v as (other endpoint, edge index) pairs, ascending.
    const std::vector<std::pair<int, int>>& neighbours(int v) const { return adjacency_[v]; }

    // Edge index for the unordered pair {u, v}, if present.
    std::optional<int> edge_index(int u, int v) const;
    std::optional<int> edge_colour(int u, int v) const;

    // Same underlying graph, new colour vector (parallel to edges()).
    EdgeColouredGraph with_colours(std::vector<int> colours) const;
    // May also change the colour count, e.g. after Abelianization.
    EdgeColouredGraph with_colours(std::vector<int> colours, int new_m) const;
    std::vector<int> colours() const;

    bool same_underlying_graph(const EdgeColouredGraph& other) const;

    friend bool operator==(const EdgeColouredGraph&, const EdgeColouredGraph&) = default;

private:
    int n_;
    int m_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Per-component BFS spanning forest. Components are numbered in order of
// their smallest vertex, which is also the component's root.
struct SpanningStructure {
    std::vector<int> component;    // vertex -> component id
    std::vector<int> roots;        // component id -> root vertex
    std::vector<int> parent;       // vertex -> BFS parent (-1 at roots)
    std::vector<int> parent_edge;  // vertex -> edge index to parent (-1 at roots)
    std::vector<int> depth;        // vertex -> BFS depth
    std::vector<bool> is_tree_edge;  // edge index -> in spanning forest
    std::vector<int> cotree_edges;   // edge indices not in the forest, ascending

    // The cycle closed by a co-tree edge: vertices starting and ending at
    // the meeting point of the two tree paths, e.g. [a, .., u, w, .., a].
    std::vector<int> fundamental_cycle(const EdgeColouredGraph& g, int cotree_edge) const;
};

struct GraphStructure {
    bool is_bipartite;
    std::vector<int> side;       // vertex -> 0/1 within its component (valid iff bipartite)
    std::vector<int> odd_cycle;  // closed vertex list, empty iff bipartite
    SpanningStructure spanning;
};

GraphStructure structure(const EdgeColouredGraph& g);

// G^Gamma: each edge colour replaced by its block label under b.
EdgeColouredGraph abelianize_graph(const EdgeColouredGraph& g, const BlockSystem& b);

// Graph file format: first line "ecg <m> <n>", edge lines "<u> <v> <c>",
// '#' comments, blank lines ignored.
EdgeColouredGraph parse_graph(const std::string& text);
std::string serialize_graph(const EdgeColouredGraph& g);

}  // namespace switchhom
