#include "cyclemis/builders.hpp"

#include <string>

#include "cyclemis/error.hpp"

namespace cyclemis {

Graph empty_graph(int n) { return make_graph(n, {}); }

Graph complete(int n) {
    if (n < 0 || n > kMaxOrder) {
        throw Error(ErrorCode::OrderTooLarge, "complete graph of order " + std::to_string(n));
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj[static_cast<std::size_t>(v)] = low_mask(n) & ~bit(v);
    }
    return Graph::from_masks(std::move(adj));
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return make_graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) {
        throw Error(ErrorCode::BadParameters, "cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return make_graph(n, edges);
}

Graph exceptional_graph() {
    return make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {5, 6}});
}

} // namespace cyclemis
