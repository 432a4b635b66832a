#include <doctest.h>

#include <random>

#include "cyclemis/builders.hpp"
#include "cyclemis/error.hpp"
#include "cyclemis/families.hpp"
#include "cyclemis/mis.hpp"
#include "oracles.hpp"

using namespace cyclemis;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<int> vs) { return VertexSet::of(g.order(), vs); }

} // namespace

TEST_CASE("maximality check") {
    const Graph k3 = complete(3);
    for (int v = 0; v < 3; ++v) {
        CHECK(is_maximal_independent(k3, set_of(k3, {v})));
    }
    CHECK_FALSE(is_maximal_independent(k3, set_of(k3, {0, 1})));
    const Graph p4 = path(4);
    CHECK(is_maximal_independent(p4, set_of(p4, {0, 2})));
    CHECK_FALSE(is_maximal_independent(p4, set_of(p4, {0})));
    CHECK_FALSE(is_maximal_independent(p4, VertexSet::empty(4)));
    const Graph e = exceptional_graph();
    CHECK(is_maximal_independent(e, set_of(e, {kExceptionalHub, 6})));
    CHECK(is_maximal_independent(Graph{}, VertexSet::empty(0)));
}

TEST_CASE("enumeration examples") {
    for (int n = 1; n <= 8; ++n) {
        const auto listing = enumerate_mis(complete(n));
        REQUIRE(listing.size() == static_cast<std::size_t>(n));
        for (const auto& s : listing.sets) {
            CHECK(s.size() == 1);
        }
    }
    const auto c5 = enumerate_mis(cycle(5));
    CHECK(c5.size() == oracle::mis_count(cycle(5)));
    CHECK(c5.size() == 5);
    for (const auto& s : c5.sets) {
        CHECK(s.size() == 2);
    }
    CHECK(enumerate_mis(moon_moser_graph(7)).size() == 12);
    CHECK(enumerate_mis(Graph{}).size() == 1);
}

TEST_CASE("counting examples") {
    CHECK(count_mis(connected_extremal_graph(14)).value() == 120);
    CHECK(count_mis(exceptional_graph()).value() == oracle::mis_count(exceptional_graph()));
    CHECK(count_mis(exceptional_graph()).value() == 9);
    CHECK(count_mis(moon_moser_alternate(7)).value() == 12);
    CHECK(count_mis(moon_moser_alternate(7)) == count_mis(moon_moser_graph(7)));
    CHECK(count_mis(star_join(3, copies(2, complete(2)))).value() == 9);
    CHECK(count_mis(Graph{}).value() == 1);
    CHECK(count_mis(empty_graph(64)).value() == 1);
    // 21 triangles and a forced edge: 2 * 3^21 fits easily.
    CHECK(count_mis(moon_moser_graph(64)).value() == max_mis(64).value());
}

TEST_CASE("m-bound examples") {
    for (int v = 0; v < 3; ++v) {
        const auto t = m_bound_components(complete(3), v);
        CHECK(t.without_vertex.value() == 2);
        CHECK(t.without_closed_neighborhood.value() == 1);
        CHECK(t.bound() == count_mis(complete(3)));
    }
    for (int v = 0; v < 5; ++v) {
        const auto t = m_bound_components(cycle(5), v);
        CHECK(t.without_vertex.value() == 3);
        CHECK(t.without_closed_neighborhood.value() == 2);
        CHECK(t.bound() == count_mis(cycle(5)));
    }
    const auto t = m_bound_components(path(4), 0);
    CHECK(t.without_vertex.value() == 2);
    CHECK(t.without_closed_neighborhood.value() == 2);
    CHECK(count_mis(path(4)).value() == 3);
    CHECK_THROWS_AS(m_bound_components(path(4), 4), Error);
}

TEST_CASE("counting, enumeration and brute force agree") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 1000; ++t) {
        const Graph g = oracle::random_graph(rng, 0, 14);
        const auto brute = oracle::all_mis(g);
        const auto listing = enumerate_mis(g);
        REQUIRE(listing.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i) {
            CHECK(listing.sets[i].bits() == brute[i]);
        }
        CHECK(count_mis(g).value() == brute.size());
    }
}

TEST_CASE("sparse graphs agree too") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 300; ++t) {
        const Graph g = oracle::random_sparse_graph(rng, 14, 3);
        CHECK(count_mis(g).value() == oracle::mis_count(g));
    }
}

TEST_CASE("no subset outside the listing is maximal independent") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        const Graph g = oracle::random_graph(rng, 1, 10);
        const auto listing = enumerate_mis(g);
        std::set<std::uint64_t> listed;
        for (const auto& s : listing.sets) {
            CHECK(is_maximal_independent(g, s));
            listed.insert(s.bits());
        }
        CHECK(listed.size() == listing.size());
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
            CHECK(is_maximal_independent(g, VertexSet(s, g.order())) == (listed.count(s) == 1));
        }
    }
}

TEST_CASE("m-bound and product rule on random graphs") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 1000; ++t) {
        const Graph g = oracle::random_graph(rng, 1, 12);
        const MisCount m = count_mis(g);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(m <= m_bound_components(g, v).bound());
        }
        const Graph h = oracle::random_graph(rng, 0, 6);
        CHECK(count_mis(disjoint_union(g, h)) == m * count_mis(h));
    }
}

TEST_CASE("clique recursion at simplicial vertices") {
    std::mt19937_64 rng(33);
    int applied = 0;
    for (int t = 0; t < 1000; ++t) {
        const Graph g = oracle::random_graph(rng, 1, 12);
        const auto v = find_simplicial_vertex(g);
        if (!v) {
            continue;
        }
        ++applied;
        CHECK(clique_recursion(g, g.closed_neighborhood(*v)).value() == oracle::mis_count(g));
    }
    CHECK(applied > 500);
}

TEST_CASE("clique recursion on complete endblocks") {
    // A K4 endblock hanging off a cycle; its non-cut vertices are simplicial.
    const Graph g = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
    CHECK(clique_recursion(g, VertexSet::of(8, {0, 1, 2, 3})).value() == oracle::mis_count(g));
    CHECK_THROWS_AS(clique_recursion(g, VertexSet::of(8, {3, 4})), Error); // no anchored vertex
    CHECK_THROWS_AS(clique_recursion(g, VertexSet::of(8, {0, 4})), Error); // not a clique
}

TEST_CASE("checked arithmetic") {
    const MisCount big(std::uint64_t{1} << 63);
    CHECK_THROWS_AS(big * MisCount(2), Error);
    CHECK_THROWS_AS(big + big, Error);
    CHECK(MisCount::power(3, 40).value() == 12157665459056928801ULL);
    CHECK_THROWS_AS(MisCount::power(3, 41), Error);
}
