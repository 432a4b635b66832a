#pragma once

// Predicates shared by the unit tests and the acceptance run.

#include <algorithm>
#include <set>

#include "cyclemis/graph.hpp"
#include "cyclemis/structure.hpp"

namespace props {

using namespace cyclemis;

// Rebuilds the edge set from a decomposition, checking each ear's shape.
inline bool replays(const Graph& g, VertexSet block, const EarDecomposition& ears) {
    const int n = g.order();
    std::set<Edge> built;
    std::set<int> present;
    auto add = [&](int a, int b) { return built.insert({std::min(a, b), std::max(a, b)}).second; };
    if (ears.base_cycle.size() < 3) {
        return false;
    }
    for (std::size_t i = 0; i < ears.base_cycle.size(); ++i) {
        if (!present.insert(ears.base_cycle[i]).second) {
            return false;
        }
        if (!add(ears.base_cycle[i], ears.base_cycle[(i + 1) % ears.base_cycle.size()])) {
            return false;
        }
    }
    for (const auto& ear : ears.ears) {
        if (ear.size() < 2 || ear.front() == ear.back() || present.count(ear.front()) == 0 ||
            present.count(ear.back()) == 0) {
            return false;
        }
        for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
            if (!present.insert(ear[i]).second) {
                return false;
            }
        }
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
            if (!add(ear[i], ear[i + 1])) {
                return false;
            }
        }
    }
    std::set<Edge> expected;
    for (auto [u, v] : g.edges()) {
        if (block.contains(u) && block.contains(v)) {
            expected.insert({u, v});
        }
    }
    return built == expected && static_cast<int>(present.size()) == block.size() && n == g.order();
}

inline bool brute_cutvertex(const Graph& g, int v) {
    const auto before = connected_components(g).size();
    const auto after = connected_components(delete_vertex(g, v)).size();
    return after > before;
}

// Endblock property checked by scanning every block meeting the result.
inline bool terminal_ok(const BlockDecomposition& d, int chosen) {
    if (!d.is_endblock(static_cast<std::size_t>(chosen))) {
        return false;
    }
    int non_end = 0;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (static_cast<int>(i) != chosen && !(d.blocks[i] & d.blocks[static_cast<std::size_t>(chosen)] & d.cutvertices).is_empty() &&
            !d.is_endblock(i)) {
            ++non_end;
        }
    }
    return non_end <= 1;
}

} // namespace props
