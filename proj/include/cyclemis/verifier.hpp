#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclemis/canonical.hpp"
#include "cyclemis/families.hpp"
#include "cyclemis/generator.hpp"
#include "cyclemis/mis.hpp"

#include <json.hpp>

namespace cyclemis {

enum class Theorem { PartOne, PartTwo, MoonMoser, Connected, Trees, Forests };

std::string_view theorem_name(Theorem t) noexcept;
/// Accepts part1, part2, moonmoser, ggg, trees, forests.
Theorem parse_theorem(std::string_view name);

struct Maximizer {
    CanonicalForm form;
    std::string graph6; // of the canonical graph

    friend bool operator==(const Maximizer& a, const Maximizer& b) { return a.form == b.form; }
    friend auto operator<=>(const Maximizer& a, const Maximizer& b) { return a.form <=> b.form; }
};

Maximizer make_maximizer(const Graph& g);

struct ReportCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    Theorem theorem = Theorem::PartOne;
    FamilySpec spec;
    std::uint64_t family_size = 0;
    MisCount maximum;
    std::vector<Maximizer> maximizers; // sorted
    MisCount expected_maximum;
    std::vector<Maximizer> expected_maximizers; // sorted
    /// False for the bound-only tree and forest checks.
    bool compare_maximizers = true;
    std::vector<ReportCheck> checks;
    double elapsed_ms = 0.0;

    /// maximum matches, maximizer sets match (when compared), every extra check passed.
    bool passed() const;
};

struct VerifyOptions {
    int shards = 1;
};

/// Graphs on n vertices with at most r cycles: maximum g(n,r), reached by G(n,r) alone.
VerificationReport verify_part_one(int n, int r, const VerifyOptions& options = {});
/// Connected graphs on n vertices with at most r cycles: maximum c(n,r),
/// reached by C(n,r) and at (4,1), (5,1), (7,2) also by P4, C5, and C(7,1) with E.
VerificationReport verify_part_two(int n, int r, const VerifyOptions& options = {});
/// MoonMoser, Connected (n >= 6), Trees, Forests.
VerificationReport verify_classic(int n, Theorem theorem, const VerifyOptions& options = {});
VerificationReport verify(Theorem theorem, int n, int r, const VerifyOptions& options = {});

struct ClaimResult {
    bool applicable = false;
    std::uint64_t scanned = 0;
    std::uint64_t premise_count = 0;
    MisCount bound;             // strict upper bound claimed for premise graphs
    MisCount best_with_premise; // largest m(G) seen among premise graphs
    std::vector<std::string> violators; // graph6

    bool passed() const { return violators.empty(); }
};

/// Premise scans: graphs with two intersecting cycles stay below g(n,r)
/// (n >= 3r-1), and connected graphs with a multicyclic endblock stay below
/// c(n,r) (n >= 3r). Scans run over graphs with at most r cycles.
struct ClaimScanReport {
    int n = 0;
    int r = 0;
    ClaimResult intersecting;
    ClaimResult endblock;
    double elapsed_ms = 0.0;

    bool passed() const { return intersecting.passed() && endblock.passed(); }
};

ClaimScanReport claim_premise_scan(int n, int r, const VerifyOptions& options = {});

/// Partial result over one shard of a family; merge is associative and
/// commutative.
struct ScanAccumulator {
    std::uint64_t family_size = 0;
    MisCount maximum;
    std::vector<Graph> maximizers;

    void add(const Graph& g, MisCount m);
    void merge(ScanAccumulator other);
};

/// Splits `family` round-robin into `shards` parts scanned concurrently.
ScanAccumulator scan_family(const std::vector<Graph>& family, int shards);

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = true);
nlohmann::ordered_json to_json(const ClaimScanReport& report, bool include_timing = true);

} // namespace cyclemis
