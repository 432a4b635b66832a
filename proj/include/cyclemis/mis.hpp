#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclemis/graph.hpp"

namespace cyclemis {

/// Number of maximal independent sets. Arithmetic throws CountOverflow
/// instead of wrapping.
class MisCount {
public:
    constexpr MisCount() = default;
    constexpr explicit MisCount(std::uint64_t value) : value_(value) {}

    constexpr std::uint64_t value() const noexcept { return value_; }

    MisCount operator+(MisCount other) const;
    MisCount operator*(MisCount other) const;
    MisCount& operator+=(MisCount other) { return *this = *this + other; }
    MisCount& operator*=(MisCount other) { return *this = *this * other; }

    /// base^exponent, checked.
    static MisCount power(std::uint64_t base, int exponent);

    friend constexpr bool operator==(MisCount, MisCount) = default;
    friend constexpr auto operator<=>(MisCount, MisCount) = default;

private:
    std::uint64_t value_ = 0;
};

struct MisListing {
    std::vector<VertexSet> sets; // sorted by mask value
    int source_order = 0;

    std::size_t size() const noexcept { return sets.size(); }
};

bool is_independent(const Graph& g, VertexSet s);
/// No edge inside s and every vertex outside s has a neighbour in s.
bool is_maximal_independent(const Graph& g, VertexSet s);

MisListing enumerate_mis(const Graph& g);

/// m(G) without materializing the sets: product over components, then the
/// clique recursion m(G) = sum over u in N[v] of m(G - N[u]) at a simplicial
/// vertex v, and otherwise a split on a maximum-degree vertex v into sets
/// containing v, m(G - N[v]), and sets of G - v that dominate v.
MisCount count_mis(const Graph& g);

struct MBoundTerms {
    MisCount without_vertex;             // m(G - v)
    MisCount without_closed_neighborhood; // m(G - N[v])

    MisCount bound() const { return without_vertex + without_closed_neighborhood; }
};

MBoundTerms m_bound_components(const Graph& g, int v);

/// Lowest-indexed vertex whose neighbourhood is a clique.
std::optional<int> find_simplicial_vertex(const Graph& g);

/// Sum over v in `clique` of m(G - N[v]). `clique` must be complete and
/// contain a vertex adjacent only to other members; throws BadParameters
/// otherwise.
MisCount clique_recursion(const Graph& g, VertexSet clique);

} // namespace cyclemis
