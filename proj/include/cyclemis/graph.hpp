#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclemis/vertex_set.hpp"

namespace cyclemis {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices. Row `v` of the
/// adjacency holds N(v) as a bit mask.
class Graph {
public:
    Graph() = default;

    /// Validates the masks: n <= 64, symmetric, loop-free, no stray high bits.
    static Graph from_masks(std::vector<std::uint64_t> adjacency);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return edges_; }

    std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet neighbors(int v) const { return {neighbor_mask(v), order()}; }
    VertexSet closed_neighborhood(int v) const { return {neighbor_mask(v) | bit(v), order()}; }
    VertexSet vertices() const { return VertexSet::full(order()); }
    int degree(int v) const;
    bool has_edge(int u, int v) const { return ((neighbor_mask(u) >> v) & 1U) != 0; }

    std::span<const std::uint64_t> adjacency() const noexcept { return adj_; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Copy with the edge uv added; u != v, both in range.
    Graph with_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<std::uint64_t> adjacency, int edges) : adj_(std::move(adjacency)), edges_(edges) {}

    std::vector<std::uint64_t> adj_;
    int edges_ = 0;
};

Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Subgraph induced by `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph delete_vertex(const Graph& g, int v);
Graph delete_closed_neighborhood(const Graph& g, int v);

Graph disjoint_union(const Graph& g, const Graph& h);
/// t disjoint copies of g.
Graph copies(int t, const Graph& g);

/// K_m * g: a clique on vertices 0..m-1 whose vertex 0 (v0) is joined to the
/// lowest-indexed vertex of every component of g. Components of g must be
/// complete; g's vertices are shifted by m.
Graph star_join(int m, const Graph& g);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);

/// Undirected DOT with vertex ids 0..n-1.
std::string to_dot(const Graph& g, std::string_view name = "G");

} // namespace cyclemis
