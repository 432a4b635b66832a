#pragma once

#include "cyclemis/graph.hpp"

namespace cyclemis {

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
/// C_n; n >= 3.
Graph cycle(int n);

/// The 7-vertex exceptional graph: triangles {0,1,2} and {0,3,4} sharing the
/// hub 0, plus the path 0-5-6.
Graph exceptional_graph();

inline constexpr int kExceptionalHub = 0;

} // namespace cyclemis
