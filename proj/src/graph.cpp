#include "cyclemis/graph.hpp"

#include <bit>
#include <sstream>

#include "cyclemis/error.hpp"

namespace cyclemis {

Graph Graph::from_masks(std::vector<std::uint64_t> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n > kMaxOrder) {
        throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " exceeds 64");
    }
    const std::uint64_t in_range = low_mask(n);
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        const std::uint64_t row = adjacency[static_cast<std::size_t>(v)];
        if ((row & ~in_range) != 0) {
            throw Error(ErrorCode::BadEndpoint, "neighbor index out of range at vertex " + std::to_string(v));
        }
        if ((row & bit(v)) != 0) {
            throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(v));
        }
        for (std::uint64_t b = row; b != 0; b &= b - 1) {
            const int u = std::countr_zero(b);
            if ((adjacency[static_cast<std::size_t>(u)] & bit(v)) == 0) {
                throw Error(ErrorCode::BadParameters, "asymmetric adjacency between " + std::to_string(u) + " and " +
                                                          std::to_string(v));
            }
        }
        degree_sum += std::popcount(row);
    }
    return Graph(std::move(adjacency), degree_sum / 2);
}

int Graph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < order(); ++u) {
        for (std::uint64_t b = neighbor_mask(u) & ~low_mask(u + 1); b != 0; b &= b - 1) {
            out.emplace_back(u, std::countr_zero(b));
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw Error(ErrorCode::BadEndpoint, "edge endpoint out of range");
    }
    if (u == v) {
        throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(v));
    }
    Graph g = *this;
    if (!has_edge(u, v)) {
        g.adj_[static_cast<std::size_t>(u)] |= bit(v);
        g.adj_[static_cast<std::size_t>(v)] |= bit(u);
        ++g.edges_;
    }
    return g;
}

Graph make_graph(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxOrder) {
        throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " outside [0, 64]");
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw Error(ErrorCode::BadEndpoint,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside order " + std::to_string(n));
        }
        if (u == v) {
            throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(u));
        }
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
    }
    return Graph::from_masks(std::move(adj));
}

namespace {

// Compresses the bits of `mask` selected by `keep` into the low positions.
std::uint64_t compress(std::uint64_t mask, std::uint64_t keep) {
    std::uint64_t out = 0;
    int i = 0;
    for (std::uint64_t b = keep; b != 0; b &= b - 1, ++i) {
        if ((mask & (b & -b)) != 0) {
            out |= bit(i);
        }
    }
    return out;
}

} // namespace

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    const std::uint64_t k = keep.bits() & low_mask(g.order());
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(std::popcount(k)));
    for (std::uint64_t b = k; b != 0; b &= b - 1) {
        adj.push_back(compress(g.neighbor_mask(std::countr_zero(b)), k));
    }
    return Graph::from_masks(std::move(adj));
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) {
        throw Error(ErrorCode::BadEndpoint, "vertex " + std::to_string(v) + " outside order " + std::to_string(g.order()));
    }
    return induced_subgraph(g, g.vertices().without(v));
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) {
        throw Error(ErrorCode::BadEndpoint, "vertex " + std::to_string(v) + " outside order " + std::to_string(g.order()));
    }
    return induced_subgraph(g, g.vertices() - g.closed_neighborhood(v));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxOrder) {
        throw Error(ErrorCode::OrderTooLarge, "disjoint union of order " + std::to_string(n));
    }
    std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
    for (std::uint64_t row : h.adjacency()) {
        adj.push_back(row << g.order());
    }
    return Graph::from_masks(std::move(adj));
}

Graph copies(int t, const Graph& g) {
    if (t < 0) {
        throw Error(ErrorCode::BadParameters, "negative copy count");
    }
    Graph out;
    for (int i = 0; i < t; ++i) {
        out = disjoint_union(out, g);
    }
    return out;
}

Graph star_join(int m, const Graph& g) {
    if (m < 1) {
        throw Error(ErrorCode::BadParameters, "star join needs a clique of size >= 1");
    }
    if (m + g.order() > kMaxOrder) {
        throw Error(ErrorCode::OrderTooLarge, "star join of order " + std::to_string(m + g.order()));
    }
    const auto components = connected_components(g);
    for (const auto& c : components) {
        if (!is_clique(g, c)) {
            throw Error(ErrorCode::NotCompleteComponents, "component is not a complete graph");
        }
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (int v = 0; v < m; ++v) {
        adj[static_cast<std::size_t>(v)] = low_mask(m) & ~bit(v);
    }
    for (std::uint64_t row : g.adjacency()) {
        adj.push_back(row << m);
    }
    for (const auto& c : components) {
        const int attach = c.lowest() + m;
        adj[0] |= bit(attach);
        adj[static_cast<std::size_t>(attach)] |= bit(0);
    }
    return Graph::from_masks(std::move(adj));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) {
        throw Error(ErrorCode::BadParameters, "permutation length differs from order");
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = 0;
        for (std::uint64_t b = g.neighbor_mask(v); b != 0; b &= b - 1) {
            row |= bit(perm[static_cast<std::size_t>(std::countr_zero(b))]);
        }
        adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
    }
    return Graph::from_masks(std::move(adj));
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    std::uint64_t left = within.bits() & low_mask(g.order());
    while (left != 0) {
        std::uint64_t comp = left & -left;
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
                next |= g.neighbor_mask(std::countr_zero(b));
            }
            next &= left & ~comp;
            comp |= next;
            frontier = next;
        }
        out.emplace_back(comp, g.order());
        left &= ~comp;
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, VertexSet s) {
    bool ok = true;
    s.for_each([&](int v) {
        if ((s.without(v).bits() & ~g.neighbor_mask(v)) != 0) {
            ok = false;
        }
    });
    return ok;
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        os << "  " << u << " -- " << v << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace cyclemis
