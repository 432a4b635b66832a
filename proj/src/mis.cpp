#include "cyclemis/mis.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cyclemis/error.hpp"

namespace cyclemis {

MisCount MisCount::operator+(MisCount other) const {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(value_, other.value_, &out)) {
        throw Error(ErrorCode::CountOverflow, "sum exceeds 64 bits");
    }
    return MisCount(out);
}

MisCount MisCount::operator*(MisCount other) const {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(value_, other.value_, &out)) {
        throw Error(ErrorCode::CountOverflow, "product exceeds 64 bits");
    }
    return MisCount(out);
}

MisCount MisCount::power(std::uint64_t base, int exponent) {
    if (exponent < 0) {
        throw Error(ErrorCode::BadParameters, "negative exponent");
    }
    MisCount acc(1);
    for (int i = 0; i < exponent; ++i) {
        acc *= MisCount(base);
    }
    return acc;
}

bool is_independent(const Graph& g, VertexSet s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && (g.neighbor_mask(v) & s.bits()) == 0; });
    return ok;
}

bool is_maximal_independent(const Graph& g, VertexSet s) {
    if (!is_independent(g, s)) {
        return false;
    }
    std::uint64_t dominated = s.bits();
    s.for_each([&](int v) { dominated |= g.neighbor_mask(v); });
    return dominated == low_mask(g.order());
}

namespace {

// All state is held as masks over the original vertex indices.
class Counter {
public:
    explicit Counter(const Graph& g) : g_(g) {}

    MisCount plain(std::uint64_t s) const {
        if (s == 0) {
            return MisCount(1);
        }
        const auto comps = connected_components(g_, VertexSet(s, g_.order()));
        if (comps.size() > 1) {
            MisCount acc(1);
            for (const auto& c : comps) {
                acc *= plain(c.bits());
            }
            return acc;
        }
        if (const int v = simplicial_in(s); v >= 0) {
            MisCount acc(0);
            const std::uint64_t clique = (g_.neighbor_mask(v) & s) | bit(v);
            for (std::uint64_t b = clique; b != 0; b &= b - 1) {
                const int u = std::countr_zero(b);
                acc += plain(s & ~(g_.neighbor_mask(u) | bit(u)));
            }
            return acc;
        }
        int pivot = -1;
        int best = -1;
        for (std::uint64_t b = s; b != 0; b &= b - 1) {
            const int v = std::countr_zero(b);
            const int d = std::popcount(g_.neighbor_mask(v) & s);
            if (d > best) {
                best = d;
                pivot = v;
            }
        }
        const std::uint64_t closed = g_.neighbor_mask(pivot) | bit(pivot);
        return plain(s & ~closed) + dominating(s & ~bit(pivot), bit(pivot));
    }

    // Maximal independent sets of G[p] that also dominate every vertex of x.
    MisCount dominating(std::uint64_t p, std::uint64_t x) const {
        if (x == 0) {
            return plain(p);
        }
        int pivot = -1;
        int best = 65;
        for (std::uint64_t b = p | x; b != 0; b &= b - 1) {
            const int u = std::countr_zero(b);
            const std::uint64_t branch = (g_.neighbor_mask(u) | bit(u)) & p;
            const int d = std::popcount(branch);
            if (d < best) {
                best = d;
                pivot = u;
            }
        }
        if (best == 0) {
            return MisCount(0);
        }
        MisCount acc(0);
        std::uint64_t cand = (g_.neighbor_mask(pivot) | bit(pivot)) & p;
        for (; cand != 0; cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            const std::uint64_t closed = g_.neighbor_mask(w) | bit(w);
            acc += dominating(p & ~closed, x & ~closed);
            p &= ~bit(w);
            x |= bit(w);
        }
        return acc;
    }

    int simplicial_in(std::uint64_t s) const {
        int chosen = -1;
        int chosen_degree = 65;
        for (std::uint64_t b = s; b != 0; b &= b - 1) {
            const int v = std::countr_zero(b);
            const std::uint64_t nb = g_.neighbor_mask(v) & s;
            const int d = std::popcount(nb);
            if (d >= chosen_degree) {
                continue;
            }
            bool clique = true;
            for (std::uint64_t c = nb; c != 0 && clique; c &= c - 1) {
                const int u = std::countr_zero(c);
                clique = (nb & ~bit(u) & ~g_.neighbor_mask(u)) == 0;
            }
            if (clique) {
                chosen = v;
                chosen_degree = d;
            }
        }
        return chosen;
    }

private:
    const Graph& g_;
};

void enumerate_into(const Graph& g, std::uint64_t chosen, std::uint64_t p, std::uint64_t x,
                    std::vector<VertexSet>& out) {
    if (p == 0) {
        if (x == 0) {
            out.emplace_back(chosen, g.order());
        }
        return;
    }
    // Some vertex of N[pivot] inside p must join the set.
    int pivot = -1;
    int best = 65;
    for (std::uint64_t b = p | x; b != 0; b &= b - 1) {
        const int u = std::countr_zero(b);
        const int d = std::popcount((g.neighbor_mask(u) | bit(u)) & p);
        if (d < best) {
            best = d;
            pivot = u;
        }
    }
    std::uint64_t cand = (g.neighbor_mask(pivot) | bit(pivot)) & p;
    for (; cand != 0; cand &= cand - 1) {
        const int w = std::countr_zero(cand);
        const std::uint64_t closed = g.neighbor_mask(w) | bit(w);
        enumerate_into(g, chosen | bit(w), p & ~closed, x & ~closed, out);
        p &= ~bit(w);
        x |= bit(w);
    }
}

} // namespace

MisListing enumerate_mis(const Graph& g) {
    MisListing listing;
    listing.source_order = g.order();
    std::vector<VertexSet> found;
    enumerate_into(g, 0, low_mask(g.order()), 0, found);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const VertexSet& s : found) {
        if (is_maximal_independent(g, s)) {
            listing.sets.push_back(s);
        }
    }
    return listing;
}

MisCount count_mis(const Graph& g) { return Counter(g).plain(low_mask(g.order())); }

MBoundTerms m_bound_components(const Graph& g, int v) {
    return {count_mis(delete_vertex(g, v)), count_mis(delete_closed_neighborhood(g, v))};
}

std::optional<int> find_simplicial_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (is_clique(g, g.neighbors(v))) {
            return v;
        }
    }
    return std::nullopt;
}

MisCount clique_recursion(const Graph& g, VertexSet clique) {
    if (clique.is_empty() || !is_clique(g, clique)) {
        throw Error(ErrorCode::BadParameters, "clique recursion needs a nonempty complete subgraph");
    }
    bool anchored = false;
    clique.for_each([&](int v) { anchored = anchored || g.neighbors(v).is_subset_of(clique); });
    if (!anchored) {
        throw Error(ErrorCode::BadParameters, "no clique vertex is adjacent only inside the clique");
    }
    MisCount acc(0);
    clique.for_each([&](int v) { acc += count_mis(delete_closed_neighborhood(g, v)); });
    return acc;
}

} // namespace cyclemis
