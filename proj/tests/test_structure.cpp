#include <doctest.h>

#include <random>

#include "cyclemis/builders.hpp"
#include "cyclemis/error.hpp"
#include "cyclemis/families.hpp"
#include "cyclemis/structure.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace cyclemis;

namespace {

std::vector<VertexSet> sets(int n, std::vector<std::vector<int>> groups) {
    std::vector<VertexSet> out;
    for (const auto& grp : groups) {
        out.push_back(VertexSet::of(n, grp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("blocks of a tree are its edges") {
    const Graph t = make_graph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
    const auto d = block_decomposition(t);
    CHECK(d.blocks.size() == 5);
    for (const auto& b : d.blocks) {
        CHECK(b.size() == 2);
    }
    CHECK(d.cutvertices == VertexSet::of(6, {1, 3, 4}));
    CHECK(block_decomposition(empty_graph(4)).blocks.empty());
}

TEST_CASE("blocks of the exceptional graph") {
    const auto d = block_decomposition(exceptional_graph());
    CHECK(d.blocks == sets(7, {{0, 1, 2}, {0, 3, 4}, {0, 5}, {5, 6}}));
    CHECK(d.cutvertices == VertexSet::of(7, {0, 5}));
    CHECK(d.tree_edges.size() == 5);
}

TEST_CASE("blocks of C(14)") {
    const Graph g = connected_extremal_graph(14);
    const auto d = block_decomposition(g);
    CHECK(d.blocks == sets(14, {{0, 1, 2, 3}, {0, 4}, {0, 8}, {0, 11}, {4, 5, 6, 7}, {8, 9, 10}, {11, 12, 13}}));
    CHECK(d.cutvertices == VertexSet::of(14, {0, 4, 8, 11}));
}

TEST_CASE("terminal endblock examples") {
    CHECK(find_terminal_endblock(cycle(5)) == 0);
    const auto p5 = block_decomposition(path(5));
    const VertexSet end = p5.blocks[static_cast<std::size_t>(find_terminal_endblock(p5))];
    CHECK((end == VertexSet::of(5, {0, 1}) || end == VertexSet::of(5, {3, 4})));

    const Graph c132 = bounded_cycle_connected_graph(13, 2);
    const auto d = block_decomposition(c132);
    const VertexSet chosen = d.blocks[static_cast<std::size_t>(find_terminal_endblock(d))];
    CHECK_FALSE(chosen.contains(0)); // never a hub attachment edge
    CHECK((chosen.size() == 3 || chosen.size() == 2));
    CHECK(props::terminal_ok(d, find_terminal_endblock(d)));

    CHECK_THROWS_AS(find_terminal_endblock(empty_graph(3)), Error);
}

TEST_CASE("block decomposition invariants on random graphs") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 1000; ++t) {
        const Graph g = t % 2 == 0 ? oracle::random_graph(rng, 1, 16)
                                   : oracle::random_sparse_graph(rng, std::uniform_int_distribution<int>(1, 16)(rng), 3);
        const auto d = block_decomposition(g);
        // every edge in exactly one block
        for (auto [u, v] : g.edges()) {
            int holders = 0;
            for (const auto& b : d.blocks) {
                holders += (b.contains(u) && b.contains(v)) ? 1 : 0;
            }
            CHECK(holders == 1);
        }
        int total = 0;
        for (const auto& b : d.blocks) {
            total += edges_within(g, b);
        }
        CHECK(total == g.edge_count());
        for (int v = 0; v < g.order(); ++v) {
            CHECK(d.cutvertices.contains(v) == props::brute_cutvertex(g, v));
        }
        // forest: the incidence graph has no more edges than nodes minus its components
        std::vector<Edge> inc;
        const int nb = static_cast<int>(d.blocks.size());
        for (auto [b, c] : d.tree_edges) {
            inc.emplace_back(b, nb + c);
        }
        const Graph bc = make_graph(nb + g.order(), inc);
        CHECK(cyclomatic_number(bc) == 0);
        if (!d.blocks.empty()) {
            CHECK(props::terminal_ok(d, find_terminal_endblock(d)));
        }
    }
}

TEST_CASE("ear decomposition examples") {
    const auto c7 = ear_decomposition(cycle(7), cycle(7).vertices());
    CHECK(c7.base_cycle.size() == 7);
    CHECK(c7.ears.empty());
    CHECK(props::replays(cycle(7), cycle(7).vertices(), c7));

    const auto k4 = ear_decomposition(complete(4), complete(4).vertices());
    CHECK(k4.ears.size() == 2);
    CHECK(props::replays(complete(4), complete(4).vertices(), k4));

    const Graph diamond = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const auto dd = ear_decomposition(diamond, diamond.vertices());
    CHECK(dd.base_cycle.size() == 3);
    CHECK(dd.ears.size() == 1);
    CHECK(props::replays(diamond, diamond.vertices(), dd));

    CHECK_THROWS_AS(ear_decomposition(path(3), path(3).vertices()), Error);
    CHECK_THROWS_AS(ear_decomposition(exceptional_graph(), exceptional_graph().vertices()), Error);
    CHECK_THROWS_AS(ear_decomposition(complete(2), complete(2).vertices()), Error);
}

TEST_CASE("every ear decomposition replays its block") {
    std::mt19937_64 rng(12);
    int blocks_seen = 0;
    for (int t = 0; t < 20000 && blocks_seen < 1000; ++t) {
        const Graph g = oracle::random_graph(rng, 3, 16);
        for (const auto& b : block_decomposition(g).blocks) {
            if (b.size() < 3) {
                continue;
            }
            ++blocks_seen;
            const auto ears = ear_decomposition(g, b);
            CHECK(props::replays(g, b, ears));
            CHECK(static_cast<int>(ears.ears.size()) == edges_within(g, b) - b.size());
        }
    }
    CHECK(blocks_seen >= 1000);
}

TEST_CASE("cycle counting examples") {
    CHECK(count_cycles(path(9)).count == 0);
    CHECK(count_cycles(make_graph(6, {{0, 1}, {1, 2}, {3, 4}})).count == 0);
    CHECK(count_cycles(complete(4)).count == 7);
    CHECK(oracle::brute_cycle_count(complete(4)) == 7);
    CHECK(count_cycles(connected_extremal_graph(14)).count == 16);
    CHECK(count_cycles(exceptional_graph()).count == 2);
    CHECK(oracle::brute_cycle_count(exceptional_graph()) == 2);
    CHECK(count_cycles(complete(5)).count == oracle::brute_cycle_count(complete(5)));
}

TEST_CASE("cycle census saturates past the limit") {
    const auto k4 = count_cycles(complete(4), 7);
    CHECK(k4.count == 7);
    CHECK_FALSE(k4.saturated);
    const auto cut = count_cycles(complete(4), 3);
    CHECK(cut.count == 3);
    CHECK(cut.saturated);
    CHECK(count_cycles(complete(4), 0).saturated);
    CHECK_FALSE(count_cycles(path(4), 0).saturated);
    CHECK(has_at_most_cycles(exceptional_graph(), 2));
    CHECK_FALSE(has_at_most_cycles(exceptional_graph(), 1));
    const auto huge = count_cycles(complete(30), 1000);
    CHECK(huge.saturated);
    CHECK(huge.count == 1000);
}

TEST_CASE("cycle counts against brute force") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 300; ++t) {
        const Graph g = oracle::random_graph(rng, 1, 8);
        CHECK(count_cycles(g).count == oracle::brute_cycle_count(g));
    }
}

TEST_CASE("cycle count bounds the cyclomatic number") {
    std::mt19937_64 rng(78);
    for (int t = 0; t < 1000; ++t) {
        const Graph g = t % 2 == 0 ? oracle::random_graph(rng, 1, 12) : oracle::random_sparse_graph(rng, 14, 4);
        const auto census = count_cycles(g, 5000);
        const int mu = cyclomatic_number(g);
        if (!census.saturated) {
            CHECK(census.count >= static_cast<std::uint64_t>(mu));
            if (cycles_pairwise_disjoint(g)) {
                CHECK(census.count == static_cast<std::uint64_t>(mu));
            }
        }
        const Graph h = relabel(g, oracle::random_permutation(rng, g.order()));
        const auto again = count_cycles(h, 5000);
        CHECK(again.count == census.count);
        CHECK(again.saturated == census.saturated);
    }
}

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic_number(path(6)) == 0);
    CHECK(cyclomatic_number(complete(4)) == 3);
    CHECK(cyclomatic_number(exceptional_graph()) == 2);
    CHECK(cyclomatic_number(empty_graph(3)) == 0);
}

TEST_CASE("cycle-shape predicates") {
    for (int n = 2; n <= 14; ++n) {
        for (int r = 1; 3 * r - 1 <= n; ++r) {
            CHECK(cycles_pairwise_disjoint(bounded_cycle_graph(n, r)));
            CHECK_FALSE(has_intersecting_cycles(bounded_cycle_graph(n, r)));
        }
    }
    CHECK_FALSE(cycles_pairwise_disjoint(complete(4)));
    CHECK(has_intersecting_cycles(complete(4)));
    // Triangles meeting at the hub: block shapes are fine, the cycles still meet.
    CHECK(cycles_pairwise_disjoint(exceptional_graph()));
    CHECK(has_intersecting_cycles(exceptional_graph()));
    CHECK_FALSE(has_multicyclic_endblock(exceptional_graph()));

    const Graph theta = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});
    CHECK(has_multicyclic_endblock(theta));
    CHECK(has_intersecting_cycles(theta));
    const Graph dumbbell = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
    CHECK_FALSE(has_intersecting_cycles(dumbbell));
    CHECK(cycles_pairwise_disjoint(dumbbell));
    // K4 in the middle of a path is not an endblock.
    const Graph inner = make_graph(6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    CHECK_FALSE(has_multicyclic_endblock(inner));
    CHECK(has_intersecting_cycles(inner));
}

TEST_CASE("intersecting cycles against per-vertex brute force") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 300; ++t) {
        const Graph g = oracle::random_sparse_graph(rng, std::uniform_int_distribution<int>(3, 8)(rng), 3);
        const auto total = oracle::brute_cycle_count(g);
        bool shared = false;
        for (int v = 0; v < g.order(); ++v) {
            shared = shared || total - oracle::brute_cycle_count(delete_vertex(g, v)) >= 2;
        }
        CHECK(has_intersecting_cycles(g) == shared);
        CHECK(cycles_pairwise_disjoint(g) == (count_cycles(g).count == static_cast<std::uint64_t>(cyclomatic_number(g))));
    }
}
