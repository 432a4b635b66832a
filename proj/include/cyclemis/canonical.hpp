#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "cyclemis/graph.hpp"

namespace cyclemis {

inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-invariant key: the order, then the upper triangle of the
/// canonically relabeled adjacency matrix packed 8 bits per byte in graph6
/// column order.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes <=> b.bytes; }
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept {
        std::string_view view(reinterpret_cast<const char*>(f.bytes.data()), f.bytes.size());
        return std::hash<std::string_view>{}(view);
    }
};

/// perm[v] is the canonical label of vertex v.
///
/// Components are labeled independently and placed in increasing order of
/// (size, relabeled adjacency). Inside a component the labeling is the one
/// giving the least relabeled adjacency over every leaf of an
/// individualization/refinement search; the refinement is iterated colour
/// refinement, and branches on a vertex whose twin (same neighbourhood apart
/// from each other) was already tried are skipped since the transposition
/// of twins is an automorphism.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);
/// g relabeled by canonical_labeling(g).
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

/// Key bytes for an already-labeled graph (no canonicalization).
CanonicalForm labeled_key(const Graph& g);

} // namespace cyclemis
