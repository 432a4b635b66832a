#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace cyclemis {

inline constexpr int kMaxOrder = 64;

/// Mask with the low `n` bits set (n in [0, 64]).
constexpr std::uint64_t low_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << v; }

/// Subset of the vertices {0, ..., universe-1} of a graph, held in one word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr VertexSet(std::uint64_t bits, int universe) : bits_(bits & low_mask(universe)), universe_(universe) {}

    static constexpr VertexSet empty(int universe) { return {0, universe}; }
    static constexpr VertexSet full(int universe) { return {low_mask(universe), universe}; }
    static VertexSet of(int universe, const std::vector<int>& members) {
        std::uint64_t b = 0;
        for (int v : members) {
            b |= bit(v);
        }
        return {b, universe};
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int universe() const noexcept { return universe_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool is_empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(int v) const noexcept { return v >= 0 && v < 64 && ((bits_ >> v) & 1U) != 0; }
    constexpr int lowest() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return {bits_ | bit(v), universe_}; }
    constexpr VertexSet without(int v) const { return {bits_ & ~bit(v), universe_}; }
    constexpr VertexSet complement() const { return {~bits_, universe_}; }
    constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    constexpr VertexSet operator|(VertexSet o) const { return {bits_ | o.bits_, universe_}; }
    constexpr VertexSet operator&(VertexSet o) const { return {bits_ & o.bits_, universe_}; }
    constexpr VertexSet operator-(VertexSet o) const { return {bits_ & ~o.bits_, universe_}; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(std::countr_zero(b));
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            f(std::countr_zero(b));
        }
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) {
            return c;
        }
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

} // namespace cyclemis
