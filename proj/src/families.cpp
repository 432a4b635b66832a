#include "cyclemis/families.hpp"

#include <string>

#include "cyclemis/builders.hpp"
#include "cyclemis/error.hpp"

namespace cyclemis {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadParameters, what); }

std::string args(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

bool same_parity(int n, int r) { return (n - r) % 2 == 0; }

Graph triangles_and_edges(int triangles, int edges) {
    return disjoint_union(copies(triangles, complete(3)), copies(edges, complete(2)));
}

} // namespace

Graph moon_moser_graph(int n) {
    if (n < 2) {
        bad("G(n) needs n >= 2, got " + std::to_string(n));
    }
    switch (n % 3) {
    case 0: return copies(n / 3, complete(3));
    case 1: return disjoint_union(copies(2, complete(2)), copies((n - 4) / 3, complete(3)));
    default: return disjoint_union(complete(2), copies((n - 2) / 3, complete(3)));
    }
}

Graph moon_moser_alternate(int n) {
    if (n < 4 || n % 3 != 1) {
        bad("G'(n) needs n >= 4 and n = 1 mod 3, got " + std::to_string(n));
    }
    return disjoint_union(complete(4), copies((n - 4) / 3, complete(3)));
}

Graph bounded_cycle_graph(int n, int r) {
    if (r < 1 || n < 3 * r - 1) {
        bad("G(n,r) needs r >= 1 and n >= 3r-1, got " + args(n, r));
    }
    if (same_parity(n, r)) {
        return triangles_and_edges(r, (n - 3 * r) / 2);
    }
    return triangles_and_edges(r - 1, (n - 3 * r + 3) / 2);
}

Graph connected_extremal_graph(int n) {
    if (n < 6) {
        bad("C(n) needs n >= 6, got " + std::to_string(n));
    }
    switch (n % 3) {
    case 0: return star_join(3, copies((n - 3) / 3, complete(3)));
    case 1: return star_join(4, copies((n - 4) / 3, complete(3)));
    default: return star_join(4, disjoint_union(complete(4), copies((n - 8) / 3, complete(3))));
    }
}

Graph bounded_cycle_connected_graph(int n, int r) {
    if (r < 1 || n < 3 * r) {
        bad("C(n,r) needs r >= 1 and n >= 3r, got " + args(n, r));
    }
    if (same_parity(n, r)) {
        return star_join(3, triangles_and_edges(r - 1, (n - 3 * r) / 2));
    }
    return star_join(1, triangles_and_edges(r, (n - 3 * r - 1) / 2));
}

MisCount max_mis(int n) {
    if (n < 2) {
        bad("g(n) needs n >= 2, got " + std::to_string(n));
    }
    switch (n % 3) {
    case 0: return MisCount::power(3, n / 3);
    case 1: return MisCount(4) * MisCount::power(3, (n - 4) / 3);
    default: return MisCount(2) * MisCount::power(3, (n - 2) / 3);
    }
}

MisCount max_mis(int n, int r) {
    if (r == 0) {
        return max_mis_forest(n);
    }
    if (r < 0 || n < 3 * r - 1) {
        bad("g(n,r) needs r >= 0 and n >= 3r-1, got " + args(n, r));
    }
    if (same_parity(n, r)) {
        return MisCount::power(3, r) * MisCount::power(2, (n - 3 * r) / 2);
    }
    return MisCount::power(3, r - 1) * MisCount::power(2, (n - 3 * r + 3) / 2);
}

MisCount max_mis_connected(int n) {
    if (n < 6) {
        bad("c(n) needs n >= 6, got " + std::to_string(n));
    }
    switch (n % 3) {
    case 0: return MisCount(2) * MisCount::power(3, (n - 3) / 3) + MisCount::power(2, (n - 3) / 3);
    case 1: return MisCount::power(3, (n - 1) / 3) + MisCount::power(2, (n - 4) / 3);
    default: return MisCount(4) * MisCount::power(3, (n - 5) / 3) + MisCount(3) * MisCount::power(2, (n - 8) / 3);
    }
}

MisCount max_mis_connected(int n, int r) {
    if (r == 0) {
        return max_mis_tree(n);
    }
    if (r < 0 || n < 3 * r) {
        bad("c(n,r) needs r >= 0 and n >= 3r, got " + args(n, r));
    }
    if (same_parity(n, r)) {
        return MisCount::power(3, r - 1) * MisCount::power(2, (n - 3 * r + 2) / 2) + MisCount::power(2, r - 1);
    }
    return MisCount::power(3, r) * MisCount::power(2, (n - 3 * r - 1) / 2);
}

MisCount max_mis_forest(int n) {
    if (n < 1) {
        bad("f(n) needs n >= 1, got " + std::to_string(n));
    }
    return MisCount::power(2, n / 2);
}

MisCount max_mis_tree(int n) {
    if (n < 1) {
        bad("t(n) needs n >= 1, got " + std::to_string(n));
    }
    if (n % 2 == 0) {
        return MisCount::power(2, (n - 2) / 2) + MisCount(1);
    }
    return MisCount::power(2, (n - 1) / 2);
}

std::string_view formula_name(Formula f) noexcept {
    switch (f) {
    case Formula::General: return "g";
    case Formula::GeneralCycles: return "g_r";
    case Formula::Connected: return "c";
    case Formula::ConnectedCycles: return "c_r";
    case Formula::Forest: return "f";
    case Formula::Tree: return "t";
    }
    return "?";
}

std::optional<MisCount> ClosedFormTable::find(Formula f, int n, int r) const {
    if (auto it = entries.find({f, n, r}); it != entries.end()) {
        return it->second;
    }
    return std::nullopt;
}

ClosedFormTable closed_form_table(int max_n, int max_r) {
    ClosedFormTable table;
    for (int n = 1; n <= max_n; ++n) {
        table.entries[{Formula::Forest, n, 0}] = max_mis_forest(n);
        table.entries[{Formula::Tree, n, 0}] = max_mis_tree(n);
        if (n >= 2) {
            table.entries[{Formula::General, n, 0}] = max_mis(n);
        }
        if (n >= 6) {
            table.entries[{Formula::Connected, n, 0}] = max_mis_connected(n);
        }
        for (int r = 1; r <= max_r; ++r) {
            if (n >= 3 * r - 1) {
                table.entries[{Formula::GeneralCycles, n, r}] = max_mis(n, r);
            }
            if (n >= 3 * r) {
                table.entries[{Formula::ConnectedCycles, n, r}] = max_mis_connected(n, r);
            }
        }
    }
    return table;
}

MonotonicityReport check_monotonicity(int max_n, int max_r) {
    if (max_n > 120 || max_n < 0 || max_r < 0) {
        bad("monotonicity sweep needs 0 <= max_n <= 120 and max_r >= 0");
    }
    MonotonicityReport report;
    report.max_n = max_n;
    report.max_r = max_r;
    for (int r = 1; r <= max_r; ++r) {
        for (int n = 3 * r - 1; n <= max_n; ++n) {
            for (int m = 3 * r - 1; m < n; ++m) {
                ++report.comparisons;
                if (!(max_mis(n, r) > max_mis(m, r))) {
                    report.violations.push_back({1, n, r, m});
                }
                if (m >= 3 * r) {
                    ++report.comparisons;
                    if (!(max_mis_connected(n, r) > max_mis_connected(m, r))) {
                        report.violations.push_back({2, n, r, m});
                    }
                }
            }
            for (int q = 0; q < r; ++q) {
                ++report.comparisons;
                const MisCount big = max_mis(n, r);
                const MisCount small = max_mis(n, q);
                const bool expect_equal = !same_parity(n, r) && q == r - 1;
                if (big == small) {
                    report.general_equalities.push_back({3, n, r, q});
                }
                if (big < small || (big == small) != expect_equal) {
                    report.violations.push_back({3, n, r, q});
                }
                if (n >= 3 * r) {
                    ++report.comparisons;
                    const MisCount cbig = max_mis_connected(n, r);
                    const MisCount csmall = max_mis_connected(n, q);
                    const bool cexpect = (n == 4 && r == 1 && q == 0) || (n == 7 && r == 2 && q == 1);
                    if (cbig == csmall) {
                        report.connected_equalities.push_back({4, n, r, q});
                    }
                    if (cbig < csmall || (cbig == csmall) != cexpect) {
                        report.violations.push_back({4, n, r, q});
                    }
                }
            }
        }
    }
    return report;
}

} // namespace cyclemis
