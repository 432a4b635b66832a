#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "cyclemis/graph.hpp"
#include "cyclemis/mis.hpp"

namespace cyclemis {

/// Identifies an extremal family: n vertices, at most r cycles, optionally
/// connected.
struct FamilySpec {
    int n = 0;
    int r = 0;
    bool connected = false;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Extremal graphs. All throw BadParameters outside their defining ranges.

/// G(n): copies of K3 padded with one K2 (n = 2 mod 3) or two K2 (n = 1 mod 3). n >= 2.
Graph moon_moser_graph(int n);
/// G'(n) = K4 plus (n-4)/3 copies of K3, for n = 1 mod 3, n >= 4.
Graph moon_moser_alternate(int n);
/// G(n,r): r triangles and (n-3r)/2 edges when n = r mod 2, otherwise r-1
/// triangles and (n-3r+3)/2 edges. r >= 1, n >= 3r-1.
Graph bounded_cycle_graph(int n, int r);
/// C(n) for n >= 6: K3 * (n-3)/3 K3, K4 * (n-4)/3 K3, or K4 * (K4 + (n-8)/3 K3).
Graph connected_extremal_graph(int n);
/// C(n,r) for r >= 1, n >= 3r: K3 * ((r-1)K3 + (n-3r)/2 K2) when n = r mod 2,
/// otherwise K1 * (rK3 + (n-3r-1)/2 K2).
Graph bounded_cycle_connected_graph(int n, int r);

// Closed forms. r = 0 aliases the forest and tree bounds.

MisCount max_mis(int n);                        // g(n), n >= 2
MisCount max_mis(int n, int r);                 // g(n,r), n >= 3r-1; g(n,0) = f(n)
MisCount max_mis_connected(int n);              // c(n), n >= 6
MisCount max_mis_connected(int n, int r);       // c(n,r), n >= 3r; c(n,0) = t(n)
MisCount max_mis_forest(int n);                 // f(n) = 2^floor(n/2), n >= 1
MisCount max_mis_tree(int n);                   // t(n), n >= 1

enum class Formula { General, GeneralCycles, Connected, ConnectedCycles, Forest, Tree };

std::string_view formula_name(Formula f) noexcept;

/// (formula, n, r) -> value; r is 0 for the r-free formulas. Only arguments
/// inside each formula's range are present.
struct ClosedFormTable {
    std::map<std::tuple<Formula, int, int>, MisCount> entries;

    std::optional<MisCount> find(Formula f, int n, int r = 0) const;
};

ClosedFormTable closed_form_table(int max_n, int max_r);

/// One comparison from the monotonicity sweep: for parts 1 and 2 `other` is
/// the smaller order m; for parts 3 and 4 it is the smaller cycle budget q.
struct MonotonicityCase {
    int part = 0;
    int n = 0;
    int r = 0;
    int other = 0;

    friend bool operator==(const MonotonicityCase&, const MonotonicityCase&) = default;
    friend auto operator<=>(const MonotonicityCase&, const MonotonicityCase&) = default;
};

struct MonotonicityReport {
    int max_n = 0;
    int max_r = 0;
    std::size_t comparisons = 0;
    std::vector<MonotonicityCase> violations;        // failed inequality or unexpected (in)equality
    std::vector<MonotonicityCase> general_equalities;   // part 3 witnesses
    std::vector<MonotonicityCase> connected_equalities; // part 4 witnesses

    bool ok() const { return violations.empty(); }
};

/// Sweeps the four monotonicity statements for r <= max_r, n <= max_n:
///  (1) g(n,r) > g(m,r) for n > m >= 3r-1
///  (2) c(n,r) > c(m,r) for n > m >= 3r
///  (3) g(n,r) >= g(n,q), r > q >= 0, n >= 3r-1; equality iff n != r mod 2 and q = r-1
///  (4) c(n,r) >= c(n,q), r > q >= 0, n >= 3r; equality iff (n,r,q) in {(4,1,0),(7,2,1)}
/// max_n <= 120.
MonotonicityReport check_monotonicity(int max_n, int max_r);

} // namespace cyclemis
