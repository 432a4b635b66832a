#include <doctest.h>

#include <set>

#include "cyclemis/canonical.hpp"
#include "cyclemis/error.hpp"
#include "cyclemis/generator.hpp"
#include "cyclemis/structure.hpp"
#include "oracles.hpp"

using namespace cyclemis;

namespace {

std::size_t generated(int n, bool connected, std::optional<int> cyclomatic = std::nullopt,
                      std::optional<int> cycles = std::nullopt) {
    std::size_t count = 0;
    generate_graphs({n, connected, cyclomatic, cycles}, [&](const Graph&) { ++count; });
    return count;
}

bool any(const Graph&) { return true; }

} // namespace

TEST_CASE("all graphs up to seven vertices") {
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        const auto count = generated(n, false);
        CHECK(count == expected[n - 1]);
        CHECK(count == oracle::burnside_graph_count(n));
        CHECK(count == oracle::minimal_pattern_count(n, any));
    }
}

TEST_CASE("connected graphs up to seven vertices") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto count = generated(n, true);
        CHECK(count == expected[n - 1]);
        CHECK(count == oracle::minimal_pattern_count(n, oracle::brute_connected));
    }
}

TEST_CASE("forests and trees") {
    const std::size_t trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    const std::size_t forests[] = {1, 2, 3, 6, 10, 20, 37, 76, 153, 329, 710, 1601};
    for (int n = 1; n <= 12; ++n) {
        CHECK(generated(n, true, 0) == trees[n - 1]);
        CHECK(generated(n, false, 0) == forests[n - 1]);
    }
    // unicyclic plus trees
    CHECK(generated(6, true, 1) == 6 + 13);
}

TEST_CASE("representatives are canonical, distinct, and ordered") {
    for (int n = 1; n <= 6; ++n) {
        const auto list = generate_graph_list({n, false, std::nullopt, std::nullopt});
        std::set<CanonicalForm> forms;
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(list[i] == canonical_graph(list[i]));
            CHECK(forms.insert(canonical_form(list[i])).second);
            if (i > 0) {
                const bool ordered = list[i - 1].edge_count() < list[i].edge_count() ||
                                     (list[i - 1].edge_count() == list[i].edge_count() &&
                                      canonical_form(list[i - 1]) < canonical_form(list[i]));
                CHECK(ordered);
            }
        }
        if (n <= 5) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                for (std::size_t j = i + 1; j < list.size(); ++j) {
                    CHECK_FALSE(oracle::brute_isomorphic(list[i], list[j]));
                }
            }
        }
    }
}

TEST_CASE("pruned generation equals filtered full generation") {
    for (int n = 1; n <= 7; ++n) {
        const auto all = generate_graph_list({n, false, std::nullopt, std::nullopt});
        for (bool connected : {false, true}) {
            for (int r = 0; r <= 3; ++r) {
                std::set<CanonicalForm> by_cycles;
                std::set<CanonicalForm> by_rank;
                for (const auto& g : all) {
                    if (connected && !is_connected(g)) {
                        continue;
                    }
                    if (has_at_most_cycles(g, r)) {
                        by_cycles.insert(canonical_form(g));
                    }
                    if (cyclomatic_number(g) <= r) {
                        by_rank.insert(canonical_form(g));
                    }
                }
                std::set<CanonicalForm> got_cycles;
                for (const auto& g : generate_graph_list({n, connected, r, r})) {
                    CHECK(count_cycles(g).count <= static_cast<std::uint64_t>(r));
                    got_cycles.insert(canonical_form(g));
                }
                std::set<CanonicalForm> got_rank;
                for (const auto& g : generate_graph_list({n, connected, r, std::nullopt})) {
                    got_rank.insert(canonical_form(g));
                }
                CHECK(got_cycles == by_cycles);
                CHECK(got_rank == by_rank);
            }
        }
    }
}

TEST_CASE("generated graphs have at least as many cycles as their rank") {
    for (const auto& g : generate_graph_list({7, false, std::nullopt, std::nullopt})) {
        CHECK(count_cycles(g).count >= static_cast<std::uint64_t>(cyclomatic_number(g)));
    }
}

TEST_CASE("generation limits") {
    CHECK_THROWS_AS(generated(11, false), Error);
    CHECK_THROWS_AS(generated(13, true, 1), Error);
    CHECK(generated(0, false) == 1);
    CHECK_THROWS_AS(generated(-1, false), Error);
    CHECK_NOTHROW(generated(12, true, std::nullopt, 1));
}
