#include "cyclemis/generator.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "cyclemis/canonical.hpp"
#include "cyclemis/error.hpp"
#include "cyclemis/structure.hpp"

namespace cyclemis {

int GenerationConstraints::max_edges() const {
    if (max_cyclomatic) {
        return std::min(n * (n - 1) / 2, n - 1 + *max_cyclomatic);
    }
    return n * (n - 1) / 2;
}

namespace {

void check_limits(const GenerationConstraints& c) {
    if (c.n < 0) {
        throw Error(ErrorCode::BadParameters, "negative order");
    }
    const bool sparse = (c.max_cyclomatic && *c.max_cyclomatic <= 3) || (c.max_cycles && *c.max_cycles <= 3);
    const int limit = sparse ? 12 : 10;
    if (c.n > limit) {
        throw Error(ErrorCode::OrderTooLarge,
                    "generation supports n <= " + std::to_string(limit) + " for these constraints, got " + std::to_string(c.n));
    }
    if ((c.max_cyclomatic && *c.max_cyclomatic < 0) || (c.max_cycles && *c.max_cycles < 0)) {
        throw Error(ErrorCode::BadParameters, "negative bound");
    }
}

} // namespace

void generate_graphs(const GenerationConstraints& c, const std::function<void(const Graph&)>& visit) {
    check_limits(c);
    const int n = c.n;
    std::vector<Graph> level{make_graph(n, {})};
    for (int edges = 0;; ++edges) {
        for (const Graph& g : level) {
            if (!c.connected || is_connected(g)) {
                visit(g);
            }
        }
        if (edges >= c.max_edges()) {
            break;
        }
        std::unordered_map<CanonicalForm, Graph, CanonicalFormHash> next;
        for (const Graph& parent : level) {
            const int mu = cyclomatic_number(parent);
            for (int v = 1; v < n; ++v) {
                for (int u = 0; u < v; ++u) {
                    if (parent.has_edge(u, v)) {
                        continue;
                    }
                    if (c.max_cyclomatic && mu >= *c.max_cyclomatic) {
                        // Joining two vertices of one component raises the cyclomatic number.
                        const auto comps = connected_components(parent);
                        if (std::any_of(comps.begin(), comps.end(),
                                        [&](const VertexSet& s) { return s.contains(u) && s.contains(v); })) {
                            continue;
                        }
                    }
                    Graph child = parent.with_edge(u, v);
                    if (c.max_cycles && !has_at_most_cycles(child, static_cast<std::uint64_t>(*c.max_cycles))) {
                        continue;
                    }
                    Graph canon = canonical_graph(child);
                    next.try_emplace(labeled_key(canon), std::move(canon));
                }
            }
        }
        if (next.empty()) {
            break;
        }
        std::vector<std::pair<CanonicalForm, Graph>> sorted(std::make_move_iterator(next.begin()),
                                                            std::make_move_iterator(next.end()));
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        level.reserve(sorted.size());
        for (auto& entry : sorted) {
            level.push_back(std::move(entry.second));
        }
    }
}

std::vector<Graph> generate_graph_list(const GenerationConstraints& c) {
    std::vector<Graph> out;
    generate_graphs(c, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace cyclemis
