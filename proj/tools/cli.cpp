#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclemis/builders.hpp"
#include "cyclemis/error.hpp"
#include "cyclemis/families.hpp"
#include "cyclemis/graph6.hpp"
#include "cyclemis/mis.hpp"
#include "cyclemis/structure.hpp"
#include "cyclemis/verifier.hpp"

namespace cyclemis::cli {
namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Graph> read_graphs(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (!line.empty()) {
            out.push_back(decode_graph6(line));
        }
    }
    return out;
}

std::string set_text(VertexSet s) {
    std::string text = "{";
    bool first = true;
    s.for_each([&](int v) {
        text += (first ? "" : ",") + std::to_string(v);
        first = false;
    });
    return text + "}";
}

Graph build_family(const std::string& family, int n, std::optional<int> r) {
    if (family == "G") {
        return r ? bounded_cycle_graph(n, *r) : moon_moser_graph(n);
    }
    if (family == "Gprime") {
        return moon_moser_alternate(n);
    }
    if (family == "C") {
        return r ? bounded_cycle_connected_graph(n, *r) : connected_extremal_graph(n);
    }
    if (family == "K") {
        return complete(n);
    }
    if (family == "P") {
        return path(n);
    }
    if (family == "cycle") {
        return cycle(n);
    }
    if (family == "empty") {
        return empty_graph(n);
    }
    if (family == "E") {
        return exceptional_graph();
    }
    throw UsageError("unknown family '" + family + "' (G, Gprime, C, K, P, cycle, empty, E)");
}

ordered_json analyze(const Graph& g, std::uint64_t cycle_limit) {
    ordered_json j;
    j["graph6"] = encode_graph6(g);
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    const auto d = block_decomposition(g);
    ordered_json blocks = ordered_json::array();
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        ordered_json b;
        b["vertices"] = d.blocks[i].members();
        b["edges"] = edges_within(g, d.blocks[i]);
        b["endblock"] = d.is_endblock(i);
        if (d.blocks[i].size() >= 3) {
            const auto ears = ear_decomposition(g, d.blocks[i]);
            b["ear_decomposition"] = {{"base_cycle", ears.base_cycle}, {"ears", ears.ears}};
        }
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    j["cutvertices"] = d.cutvertices.members();
    j["terminal_endblock"] = d.blocks.empty() ? ordered_json(nullptr) : ordered_json(find_terminal_endblock(d));
    const auto census = count_cycles(g, cycle_limit);
    j["cycles"] = {{"count", census.count}, {"saturated", census.saturated}};
    if (cycle_limit != kUnlimited) {
        j["cycles"]["limit"] = cycle_limit;
    }
    j["cyclomatic_number"] = cyclomatic_number(g);
    j["connected"] = is_connected(g);
    j["cycles_pairwise_disjoint"] = cycles_pairwise_disjoint(g);
    j["intersecting_cycles"] = has_intersecting_cycles(g);
    j["multicyclic_endblock"] = has_multicyclic_endblock(g);
    j["mis_count"] = count_mis(g).value();
    return j;
}

std::string cell(const ClosedFormTable& table, Formula f, int n, int r) {
    const auto v = table.find(f, n, r);
    return v ? std::to_string(v->value()) : "-";
}

void print_formulas(std::ostream& out, int max_n, int max_r, bool json) {
    const ClosedFormTable table = closed_form_table(max_n, max_r);
    if (json) {
        ordered_json rows = ordered_json::array();
        for (const auto& [key, value] : table.entries) {
            const auto& [f, n, r] = key;
            rows.push_back({{"formula", formula_name(f)}, {"n", n}, {"r", r}, {"value", value.value()}});
        }
        out << rows.dump(2) << "\n";
        return;
    }
    std::vector<std::string> header{"n", "g", "c", "f", "t"};
    for (int r = 1; r <= max_r; ++r) {
        header.push_back("g(n," + std::to_string(r) + ")");
    }
    for (int r = 1; r <= max_r; ++r) {
        header.push_back("c(n," + std::to_string(r) + ")");
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << std::setw(i == 0 ? 3 : 10) << row[i];
        }
        out << "\n";
    };
    emit(header);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> row{std::to_string(n), cell(table, Formula::General, n, 0),
                                     cell(table, Formula::Connected, n, 0), cell(table, Formula::Forest, n, 0),
                                     cell(table, Formula::Tree, n, 0)};
        for (int r = 1; r <= max_r; ++r) {
            row.push_back(cell(table, Formula::GeneralCycles, n, r));
        }
        for (int r = 1; r <= max_r; ++r) {
            row.push_back(cell(table, Formula::ConnectedCycles, n, r));
        }
        emit(row);
    }
}

std::string summary(const VerificationReport& rep) {
    std::ostringstream os;
    os << theorem_name(rep.theorem) << " n=" << rep.spec.n;
    if (rep.theorem == Theorem::PartOne || rep.theorem == Theorem::PartTwo) {
        os << " r=" << rep.spec.r;
    }
    os << ": family " << rep.family_size << ", maximum " << rep.maximum.value() << " (expected "
       << rep.expected_maximum.value() << "), " << rep.maximizers.size() << " maximizer"
       << (rep.maximizers.size() == 1 ? "" : "s");
    if (rep.compare_maximizers) {
        os << " (expected " << rep.expected_maximizers.size() << ")";
    }
    for (const auto& c : rep.checks) {
        os << ", " << c.name << ": " << (c.passed ? "ok" : "FAILED");
    }
    os << " -> " << (rep.passed() ? "PASS" : "FAIL");
    return os.str();
}

std::string summary(const ClaimScanReport& rep) {
    std::ostringstream os;
    auto one = [&](const char* name, const ClaimResult& c) {
        os << name << " ";
        if (!c.applicable) {
            os << "n/a";
            return;
        }
        os << c.premise_count << "/" << c.scanned << " premise graphs, best " << c.best_with_premise.value() << " < "
           << c.bound.value() << (c.passed() ? " ok" : " VIOLATED");
    };
    os << "claims n=" << rep.n << " r=" << rep.r << ": ";
    one("intersecting", rep.intersecting);
    os << "; ";
    one("endblock", rep.endblock);
    os << " -> " << (rep.passed() ? "PASS" : "FAIL");
    return os.str();
}

bool needs_r(const std::string& kind) { return kind == "part1" || kind == "part2" || kind == "claims"; }

int default_shards() {
    if (const char* env = std::getenv("CYCLEMIS_SHARDS")) {
        try {
            const int k = std::stoi(env);
            if (k >= 1) {
                return k;
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// Runs one verification cell and prints it; returns true on pass.
bool run_cell(std::ostream& out, const std::string& kind, int n, int r, bool json, const VerifyOptions& options,
              ordered_json* collect) {
    if (kind == "claims") {
        const auto rep = claim_premise_scan(n, r, options);
        if (collect != nullptr) {
            collect->push_back(to_json(rep));
        } else if (json) {
            out << to_json(rep).dump(2) << "\n";
        } else {
            out << summary(rep) << "\n";
        }
        return rep.passed();
    }
    const auto rep = verify(parse_theorem(kind), n, r, options);
    if (collect != nullptr) {
        collect->push_back(to_json(rep));
    } else if (json) {
        out << to_json(rep).dump(2) << "\n";
    } else {
        out << summary(rep) << "\n";
    }
    return rep.passed();
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact maximal independent set counts for graphs with few cycles"};
    app.require_subcommand(1);

    bool enumerate = false;
    auto* count_cmd = app.add_subcommand("count", "read graph6 lines on stdin, print m(G) for each");
    count_cmd->add_flag("--enumerate", enumerate, "also list every maximal independent set");

    std::string family;
    int build_n = 0;
    std::optional<int> build_r;
    bool dot = false;
    auto* build_cmd = app.add_subcommand("build", "emit an extremal or named graph as graph6");
    build_cmd->add_option("family", family, "G, Gprime, C, K, P, cycle, empty, E")->required();
    build_cmd->add_option("n", build_n, "vertex count");
    build_cmd->add_option("r", build_r, "cycle budget (G and C only)");
    build_cmd->add_flag("--dot", dot, "emit DOT instead of graph6");

    int table_n = 20;
    int table_r = 4;
    bool table_json = false;
    auto* formulas_cmd = app.add_subcommand("formulas", "closed-form table of g, c, f, t, g(n,r), c(n,r)");
    formulas_cmd->add_option("--max-n", table_n)->check(CLI::Range(1, 120));
    formulas_cmd->add_option("--max-r", table_r)->check(CLI::Range(0, 40));
    formulas_cmd->add_flag("--json", table_json);

    std::uint64_t cycle_limit = kUnlimited;
    auto* analyze_cmd = app.add_subcommand("analyze", "blocks, cutvertices, ears, cycles of graph6 lines on stdin");
    analyze_cmd->add_option("--cycle-limit", cycle_limit, "stop counting cycles past this many");

    std::string kind;
    int verify_n = 0;
    std::optional<int> verify_r;
    bool verify_json = false;
    int shards = 0;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive check of one theorem instance");
    verify_cmd->add_option("kind", kind, "part1, part2, moonmoser, ggg, trees, forests, claims")
        ->required()
        ->check(CLI::IsMember({"part1", "part2", "moonmoser", "ggg", "trees", "forests", "claims"}));
    verify_cmd->add_option("n", verify_n)->required()->check(CLI::Range(1, 12));
    verify_cmd->add_option("r", verify_r)->check(CLI::Range(1, 4));
    verify_cmd->add_flag("--json", verify_json);
    verify_cmd->add_option("--shards", shards, "worker threads (default 1, or CYCLEMIS_SHARDS)")->check(CLI::Range(1, 256));

    std::string sweep_kind;
    int sweep_max_n = 8;
    int sweep_max_r = 3;
    bool sweep_json = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "run verify over every valid cell of a grid");
    sweep_cmd->add_option("kind", sweep_kind)
        ->required()
        ->check(CLI::IsMember({"part1", "part2", "moonmoser", "ggg", "trees", "forests", "claims"}));
    sweep_cmd->add_option("--max-n", sweep_max_n)->check(CLI::Range(1, 12));
    sweep_cmd->add_option("--max-r", sweep_max_r)->check(CLI::Range(1, 4));
    sweep_cmd->add_flag("--json", sweep_json);
    sweep_cmd->add_option("--shards", shards)->check(CLI::Range(1, 256));

    int mono_n = 60;
    int mono_r = 12;
    bool mono_json = false;
    auto* mono_cmd = app.add_subcommand("monotonicity", "sweep the closed-form monotonicity inequalities");
    mono_cmd->add_option("--max-n", mono_n)->check(CLI::Range(0, 120));
    mono_cmd->add_option("--max-r", mono_r)->check(CLI::Range(0, 40));
    mono_cmd->add_flag("--json", mono_json);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All) << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    const VerifyOptions options{shards > 0 ? shards : default_shards()};
    try {
        if (count_cmd->parsed()) {
            for (const Graph& g : read_graphs(in)) {
                out << count_mis(g).value() << "\n";
                if (enumerate) {
                    for (const VertexSet& s : enumerate_mis(g).sets) {
                        out << "  " << set_text(s) << "\n";
                    }
                }
            }
            return 0;
        }
        if (build_cmd->parsed()) {
            if (family != "E" && build_cmd->count("n") == 0) {
                throw UsageError("build " + family + " needs n");
            }
            const Graph g = build_family(family, build_n, build_r);
            out << (dot ? to_dot(g) : encode_graph6(g) + "\n");
            return 0;
        }
        if (formulas_cmd->parsed()) {
            print_formulas(out, table_n, table_r, table_json);
            return 0;
        }
        if (analyze_cmd->parsed()) {
            for (const Graph& g : read_graphs(in)) {
                out << analyze(g, cycle_limit).dump() << "\n";
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (needs_r(kind) && !verify_r) {
                throw UsageError(kind + " needs r");
            }
            return run_cell(out, kind, verify_n, verify_r.value_or(0), verify_json, options, nullptr) ? 0 : 1;
        }
        if (sweep_cmd->parsed()) {
            bool all = true;
            ordered_json collected = ordered_json::array();
            ordered_json* sink = sweep_json ? &collected : nullptr;
            if (needs_r(sweep_kind)) {
                const int offset = sweep_kind == "part2" ? 0 : -1;
                for (int r = 1; r <= sweep_max_r; ++r) {
                    for (int n = 3 * r + offset; n <= sweep_max_n; ++n) {
                        all = run_cell(out, sweep_kind, n, r, false, options, sink) && all;
                    }
                }
            } else {
                const int first = sweep_kind == "ggg" ? 6 : sweep_kind == "moonmoser" ? 2 : 1;
                for (int n = first; n <= sweep_max_n; ++n) {
                    all = run_cell(out, sweep_kind, n, 0, false, options, sink) && all;
                }
            }
            if (sweep_json) {
                out << collected.dump(2) << "\n";
            }
            return all ? 0 : 1;
        }
        if (mono_cmd->parsed()) {
            const auto rep = check_monotonicity(mono_n, mono_r);
            auto cases = [](const std::vector<MonotonicityCase>& cs) {
                ordered_json arr = ordered_json::array();
                for (const auto& c : cs) {
                    arr.push_back({{"part", c.part}, {"n", c.n}, {"r", c.r}, {"other", c.other}});
                }
                return arr;
            };
            if (mono_json) {
                ordered_json j;
                j["max_n"] = rep.max_n;
                j["max_r"] = rep.max_r;
                j["comparisons"] = rep.comparisons;
                j["violations"] = cases(rep.violations);
                j["general_equalities"] = cases(rep.general_equalities);
                j["connected_equalities"] = cases(rep.connected_equalities);
                j["verdict"] = rep.ok() ? "pass" : "fail";
                out << j.dump(2) << "\n";
            } else {
                out << rep.comparisons << " comparisons, " << rep.violations.size() << " violations, "
                    << rep.general_equalities.size() << " equalities in g(n,r) >= g(n,q), connected equalities:";
                for (const auto& c : rep.connected_equalities) {
                    out << " (" << c.n << "," << c.r << "," << c.other << ")";
                }
                out << " -> " << (rep.ok() ? "PASS" : "FAIL") << "\n";
            }
            return rep.ok() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace cyclemis::cli
