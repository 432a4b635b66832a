#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cyclemis/graph.hpp"

namespace cyclemis {

struct GenerationConstraints {
    int n = 0;
    bool connected = false;
    /// Upper bound on edges - vertices + components; nullopt means none.
    std::optional<int> max_cyclomatic;
    /// Upper bound on the number of cycles; nullopt means none.
    std::optional<int> max_cycles;

    /// n - 1 + max_cyclomatic when bounded, otherwise n(n-1)/2.
    int max_edges() const;
};

/// Calls `visit` once per isomorphism class of graphs on c.n vertices meeting
/// the constraints, with the canonical representative (canonical_graph),
/// ordered by edge count and then canonical form.
///
/// Classes are grown one edge at a time from the empty graph; each level is
/// deduplicated by canonical form. Both bounds are monotone under adding an
/// edge, so a child over either bound is dropped together with everything
/// above it.
///
/// Order limits: n <= 12 when a bound of at most 3 applies, n <= 10 otherwise.
void generate_graphs(const GenerationConstraints& c, const std::function<void(const Graph&)>& visit);

std::vector<Graph> generate_graph_list(const GenerationConstraints& c);

} // namespace cyclemis
