#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "cyclemis/graph.hpp"

namespace cyclemis {

struct BlockDecomposition {
    std::vector<VertexSet> blocks; // sorted by mask value
    VertexSet cutvertices;
    std::vector<std::pair<int, int>> tree_edges; // (block index, cutvertex)

    int cutvertex_count(std::size_t block) const { return (blocks[block] & cutvertices).size(); }
    bool is_endblock(std::size_t block) const { return cutvertex_count(block) <= 1; }
    std::vector<int> endblocks() const;
};

/// Lowpoint decomposition. Isolated vertices lie in no block; a bridge is a
/// 2-vertex block.
BlockDecomposition block_decomposition(const Graph& g);

int edges_within(const Graph& g, VertexSet s);

/// Index of an endblock meeting at most one non-endblock: an end of a longest
/// path in the block-cutvertex tree holding block 0. Throws NoBlocks when g
/// has no edges.
int find_terminal_endblock(const Graph& g);
int find_terminal_endblock(const BlockDecomposition& blocks);

struct EarDecomposition {
    std::vector<int> base_cycle;        // cyclic order, first vertex not repeated
    std::vector<std::vector<int>> ears; // endpoint, internal vertices..., endpoint
};

/// Throws NotTwoConnected unless `block` induces a 2-connected subgraph on
/// at least 3 vertices.
EarDecomposition ear_decomposition(const Graph& g, VertexSet block);

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

/// count never exceeds limit; saturated means more than `limit` cycles exist
/// and the search stopped with count = limit.
struct CycleCensus {
    std::uint64_t count = 0;
    std::uint64_t limit = kUnlimited;
    bool saturated = false;
};

/// Distinct simple cycles (identified by edge set), enumerated block by block.
CycleCensus count_cycles(const Graph& g, std::uint64_t limit = kUnlimited);
bool has_at_most_cycles(const Graph& g, std::uint64_t r);

/// edges - vertices + components.
int cyclomatic_number(const Graph& g);

/// Every block is a single edge or a chordless cycle.
bool cycles_pairwise_disjoint(const Graph& g);
/// Two distinct cycles share a vertex.
bool has_intersecting_cycles(const Graph& g);
/// Some endblock carries two or more cycles.
bool has_multicyclic_endblock(const Graph& g);

} // namespace cyclemis
