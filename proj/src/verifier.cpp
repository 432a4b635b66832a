#include "cyclemis/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "cyclemis/builders.hpp"
#include "cyclemis/error.hpp"
#include "cyclemis/graph6.hpp"
#include "cyclemis/structure.hpp"

namespace cyclemis {

std::string_view theorem_name(Theorem t) noexcept {
    switch (t) {
    case Theorem::PartOne: return "part1";
    case Theorem::PartTwo: return "part2";
    case Theorem::MoonMoser: return "moonmoser";
    case Theorem::Connected: return "ggg";
    case Theorem::Trees: return "trees";
    case Theorem::Forests: return "forests";
    }
    return "?";
}

Theorem parse_theorem(std::string_view name) {
    for (Theorem t : {Theorem::PartOne, Theorem::PartTwo, Theorem::MoonMoser, Theorem::Connected, Theorem::Trees,
                      Theorem::Forests}) {
        if (theorem_name(t) == name) {
            return t;
        }
    }
    throw Error(ErrorCode::BadParameters, "unknown theorem '" + std::string(name) + "'");
}

Maximizer make_maximizer(const Graph& g) {
    const Graph canon = canonical_graph(g);
    return {labeled_key(canon), encode_graph6(canon)};
}

bool VerificationReport::passed() const {
    if (maximum != expected_maximum) {
        return false;
    }
    if (compare_maximizers && maximizers != expected_maximizers) {
        return false;
    }
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

void ScanAccumulator::add(const Graph& g, MisCount m) {
    ++family_size;
    if (maximizers.empty() || m > maximum) {
        maximum = m;
        maximizers.clear();
        maximizers.push_back(g);
    } else if (m == maximum) {
        maximizers.push_back(g);
    }
}

void ScanAccumulator::merge(ScanAccumulator other) {
    family_size += other.family_size;
    if (other.maximizers.empty()) {
        return;
    }
    if (maximizers.empty() || other.maximum > maximum) {
        maximum = other.maximum;
        maximizers = std::move(other.maximizers);
    } else if (other.maximum == maximum) {
        maximizers.insert(maximizers.end(), std::make_move_iterator(other.maximizers.begin()),
                          std::make_move_iterator(other.maximizers.end()));
    }
}

ScanAccumulator scan_family(const std::vector<Graph>& family, int shards) {
    shards = std::max(1, shards);
    std::vector<ScanAccumulator> parts(static_cast<std::size_t>(shards));
    auto work = [&](int s) {
        for (std::size_t i = static_cast<std::size_t>(s); i < family.size(); i += static_cast<std::size_t>(shards)) {
            parts[static_cast<std::size_t>(s)].add(family[i], count_mis(family[i]));
        }
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (int s = 0; s < shards; ++s) {
            threads.emplace_back(work, s);
        }
    }
    ScanAccumulator total;
    for (auto& part : parts) {
        total.merge(std::move(part));
    }
    return total;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Maximizer> maximizer_set(const std::vector<Graph>& graphs) {
    std::vector<Maximizer> out;
    for (const Graph& g : graphs) {
        out.push_back(make_maximizer(g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerificationReport run_scan(Theorem theorem, FamilySpec spec, const GenerationConstraints& constraints,
                            MisCount expected, const std::vector<Graph>& expected_graphs, bool compare,
                            const VerifyOptions& options, Clock::time_point start) {
    VerificationReport report;
    report.theorem = theorem;
    report.spec = spec;
    const ScanAccumulator acc = scan_family(generate_graph_list(constraints), options.shards);
    report.family_size = acc.family_size;
    report.maximum = acc.maximum;
    report.maximizers = maximizer_set(acc.maximizers);
    report.expected_maximum = expected;
    report.expected_maximizers = maximizer_set(expected_graphs);
    report.compare_maximizers = compare;
    report.elapsed_ms = since(start);
    return report;
}

void check_scannable(int n) {
    if (n < 1) {
        throw Error(ErrorCode::BadParameters, "order must be positive");
    }
}

} // namespace

VerificationReport verify_part_one(int n, int r, const VerifyOptions& options) {
    const auto start = Clock::now();
    if (r < 1 || n < 3 * r - 1) {
        throw Error(ErrorCode::BadParameters, "part one needs r >= 1 and n >= 3r-1");
    }
    check_scannable(n);
    GenerationConstraints c{n, false, r, r};
    std::vector<ReportCheck> extra;
    // Moon-Moser allows G'(n) as a second maximizer; when g(n,r) = g(n) the
    // cycle budget has to be what rules it out.
    if (n % 3 == 1 && n >= 4 && max_mis(n, r) == max_mis(n)) {
        const auto census = count_cycles(moon_moser_alternate(n), static_cast<std::uint64_t>(r));
        extra.push_back({"alternate Moon-Moser graph exceeds cycle budget", census.saturated,
                         "G'(" + std::to_string(n) + ") has more than " + std::to_string(r) + " cycles"});
    }
    auto report = run_scan(Theorem::PartOne, {n, r, false}, c, max_mis(n, r), {bounded_cycle_graph(n, r)}, true,
                           options, start);
    report.checks = std::move(extra);
    return report;
}

VerificationReport verify_part_two(int n, int r, const VerifyOptions& options) {
    const auto start = Clock::now();
    if (r < 1 || n < 3 * r) {
        throw Error(ErrorCode::BadParameters, "part two needs r >= 1 and n >= 3r");
    }
    GenerationConstraints c{n, true, r, r};
    std::vector<Graph> expected{bounded_cycle_connected_graph(n, r)};
    if (n == 4 && r == 1) {
        expected.push_back(path(4));
    } else if (n == 5 && r == 1) {
        expected.push_back(cycle(5));
    } else if (n == 7 && r == 2) {
        expected.push_back(bounded_cycle_connected_graph(7, 1));
        expected.push_back(exceptional_graph());
    }
    return run_scan(Theorem::PartTwo, {n, r, true}, c, max_mis_connected(n, r), expected, true, options, start);
}

VerificationReport verify_classic(int n, Theorem theorem, const VerifyOptions& options) {
    const auto start = Clock::now();
    check_scannable(n);
    switch (theorem) {
    case Theorem::MoonMoser: {
        std::vector<Graph> expected{moon_moser_graph(n)};
        if (n % 3 == 1 && n >= 4) {
            expected.push_back(moon_moser_alternate(n));
        }
        return run_scan(theorem, {n, 0, false}, {n, false, {}, {}}, max_mis(n), expected, true, options, start);
    }
    case Theorem::Connected:
        return run_scan(theorem, {n, 0, true}, {n, true, {}, {}}, max_mis_connected(n),
                        {connected_extremal_graph(n)}, true, options, start);
    case Theorem::Trees:
        return run_scan(theorem, {n, 0, true}, {n, true, 0, 0}, max_mis_tree(n), {}, false, options, start);
    case Theorem::Forests:
        return run_scan(theorem, {n, 0, false}, {n, false, 0, 0}, max_mis_forest(n), {}, false, options, start);
    default:
        throw Error(ErrorCode::BadParameters, "not a classic theorem: " + std::string(theorem_name(theorem)));
    }
}

VerificationReport verify(Theorem theorem, int n, int r, const VerifyOptions& options) {
    switch (theorem) {
    case Theorem::PartOne: return verify_part_one(n, r, options);
    case Theorem::PartTwo: return verify_part_two(n, r, options);
    default: return verify_classic(n, theorem, options);
    }
}

ClaimScanReport claim_premise_scan(int n, int r, const VerifyOptions& options) {
    const auto start = Clock::now();
    if (r < 1 || n < 3 * r - 1) {
        throw Error(ErrorCode::BadParameters, "claim scan needs r >= 1 and n >= 3r-1");
    }
    ClaimScanReport report;
    report.n = n;
    report.r = r;
    const auto family = generate_graph_list({n, false, r, r});
    const int shards = std::max(1, options.shards);

    struct Partial {
        ClaimResult intersecting;
        ClaimResult endblock;
    };
    std::vector<Partial> parts(static_cast<std::size_t>(shards));
    const MisCount general_bound = max_mis(n, r);
    const bool connected_applies = n >= 3 * r;
    const MisCount connected_bound = connected_applies ? max_mis_connected(n, r) : MisCount(0);
    auto record = [](ClaimResult& res, const Graph& g, MisCount m, MisCount bound) {
        ++res.premise_count;
        res.best_with_premise = std::max(res.best_with_premise, m);
        if (!(m < bound)) {
            res.violators.push_back(encode_graph6(g));
        }
    };
    auto work = [&](int s) {
        Partial& part = parts[static_cast<std::size_t>(s)];
        for (std::size_t i = static_cast<std::size_t>(s); i < family.size(); i += static_cast<std::size_t>(shards)) {
            const Graph& g = family[i];
            ++part.intersecting.scanned;
            const bool p1 = has_intersecting_cycles(g);
            const bool connected = connected_applies && is_connected(g);
            const bool p2 = connected && has_multicyclic_endblock(g);
            if (connected) {
                ++part.endblock.scanned;
            }
            if (!p1 && !p2) {
                continue;
            }
            const MisCount m = count_mis(g);
            if (p1) {
                record(part.intersecting, g, m, general_bound);
            }
            if (p2) {
                record(part.endblock, g, m, connected_bound);
            }
        }
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (int s = 0; s < shards; ++s) {
            threads.emplace_back(work, s);
        }
    }
    auto fold = [](ClaimResult& into, const ClaimResult& from) {
        into.scanned += from.scanned;
        into.premise_count += from.premise_count;
        into.best_with_premise = std::max(into.best_with_premise, from.best_with_premise);
        into.violators.insert(into.violators.end(), from.violators.begin(), from.violators.end());
    };
    report.intersecting.applicable = true;
    report.intersecting.bound = general_bound;
    report.endblock.applicable = connected_applies;
    report.endblock.bound = connected_bound;
    for (const Partial& part : parts) {
        fold(report.intersecting, part.intersecting);
        fold(report.endblock, part.endblock);
    }
    std::sort(report.intersecting.violators.begin(), report.intersecting.violators.end());
    std::sort(report.endblock.violators.begin(), report.endblock.violators.end());
    report.elapsed_ms = since(start);
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing) {
    using nlohmann::ordered_json;
    auto graph6_list = [](const std::vector<Maximizer>& ms) {
        ordered_json arr = ordered_json::array();
        for (const auto& m : ms) {
            arr.push_back(m.graph6);
        }
        return arr;
    };
    ordered_json j;
    j["spec"] = {{"theorem", theorem_name(report.theorem)},
                 {"n", report.spec.n},
                 {"r", report.spec.r},
                 {"connected", report.spec.connected}};
    j["family_size"] = report.family_size;
    j["maximum"] = report.maximum.value();
    j["maximizers"] = graph6_list(report.maximizers);
    ordered_json expected;
    expected["maximum"] = report.expected_maximum.value();
    expected["maximizers"] = report.compare_maximizers ? graph6_list(report.expected_maximizers) : ordered_json(nullptr);
    j["expected"] = expected;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["verdict"] = report.passed() ? "pass" : "fail";
    if (include_timing) {
        j["elapsed_ms"] = report.elapsed_ms;
    }
    return j;
}

nlohmann::ordered_json to_json(const ClaimScanReport& report, bool include_timing) {
    using nlohmann::ordered_json;
    auto one = [](const ClaimResult& c) {
        ordered_json j;
        j["applicable"] = c.applicable;
        j["scanned"] = c.scanned;
        j["premise_count"] = c.premise_count;
        j["bound"] = c.bound.value();
        j["best_with_premise"] = c.best_with_premise.value();
        j["violators"] = c.violators;
        j["verdict"] = c.passed() ? "pass" : "fail";
        return j;
    };
    ordered_json j;
    j["n"] = report.n;
    j["r"] = report.r;
    j["intersecting_cycles"] = one(report.intersecting);
    j["multicyclic_endblock"] = one(report.endblock);
    j["verdict"] = report.passed() ? "pass" : "fail";
    if (include_timing) {
        j["elapsed_ms"] = report.elapsed_ms;
    }
    return j;
}

} // namespace cyclemis
