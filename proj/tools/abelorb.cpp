// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "abelorb/anr.hpp"
#include "abelorb/chevalley.hpp"
#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/json_io.hpp"
#include "abelorb/normal_form.hpp"
#include "abelorb/notation.hpp"
#include "abelorb/orbits.hpp"
#include "abelorb/suite.hpp"

using namespace abelorb;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Options shared by every subcommand that takes an ideal.
struct IdealOptions {
    std::string generators;
    std::string shape;
    int max_abelian = 0;
    int anr = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--ideal", generators, "generators (minimal roots), e.g. \"e2-e4,e3-e6\"");
        cmd->add_option("--shape", shape, "type A Young diagram row lengths, e.g. 3,3,1");
        cmd->add_option("--max-abelian", max_abelian, "index of a maximal abelian ideal (1-based, see `ideals --maximal`)");
        cmd->add_option("--anr", anr, "abelian nilradical at this node");
    }
    [[nodiscard]] int given() const {
        return !generators.empty() + !shape.empty() + (max_abelian != 0) + (anr != 0);
    }
    [[nodiscard]] IdealSpec spec() const {
        if (given() != 1) throw UsageError("exactly one of --ideal, --shape, --max-abelian, --anr is required");
        IdealSpec s;
        if (!generators.empty()) {
            s.kind = IdealSpec::Kind::Generators;
            s.generators = generators;
        } else if (!shape.empty()) {
            s.kind = IdealSpec::Kind::Shape;
            s.shape = parse_int_list(shape);
        } else if (max_abelian != 0) {
            s.kind = IdealSpec::Kind::MaxAbelian;
            s.index = max_abelian;
        } else {
            s.kind = IdealSpec::Kind::Nilradical;
            s.index = anr;
        }
        return s;
    }
};

struct Format {
    bool json = false;
    bool csv = false;

    void add_to(CLI::App* cmd, bool with_csv) {
        auto* j = cmd->add_flag("--json", json, "JSON output");
        if (with_csv) cmd->add_flag("--csv", csv, "CSV output")->excludes(j);
    }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string braces(const std::string& s) { return "{" + s + "}"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int external_node(const RootSystem& rs, Numbering numbering, int internal) {
    return node_to_external(rs.type(), numbering, internal);
}

int internal_node(const RootSystem& rs, Numbering numbering, int node) {
    require(node >= 1 && node <= rs.rank(), "node out of range (1.." + std::to_string(rs.rank()) + ")");
    return node_to_internal(rs.type(), numbering, node);
}

// --- subcommands -------------------------------------------------------------

void cmd_roots(const RootSystem& rs, Numbering numbering, const Format& fmt) {
    if (fmt.json) return print_json(roots_table_json(rs, numbering));
    if (fmt.csv) {
        std::cout << "index,height,length,root,coeffs\n";
        for (int i = 0; i < rs.num_positive(); ++i)
            std::cout << i << "," << rs.height(i) << "," << (rs.is_long(i) ? "long" : "short") << ","
                      << csv_field(format_root(rs, i, numbering)) << ","
                      << csv_field(format_tuple(rs, rs.coeffs(i), numbering)) << "\n";
        return;
    }
    std::cout << rs.type().name() << ": " << rs.num_positive() << " positive roots, theta = "
              << format_root(rs, rs.theta(), numbering) << "\n";
    for (int i = 0; i < rs.num_positive(); ++i)
        std::cout << "  " << i << "  ht " << rs.height(i) << "  " << (rs.is_long(i) ? "long " : "short") << "  "
                  << format_root(rs, i, numbering)
                  << (rs.has_eps() ? "  " + format_tuple(rs, rs.coeffs(i), numbering) : "") << "\n";
}

void cmd_ideals(const RootSystem& rs, Numbering numbering, bool maximal, bool anr, const Format& fmt) {
    if (maximal && anr) throw UsageError("--maximal and --anr are exclusive");
    std::vector<RootSet> list;
    std::vector<int> nodes;
    if (anr) {
        for (const auto& nil : abelian_nilradicals(rs)) {
            list.push_back(nil.roots);
            nodes.push_back(external_node(rs, numbering, nil.node));
        }
    } else {
        list = maximal ? maximal_abelian_ideals(rs) : enumerate_abelian_ideals(rs);
    }
    if (fmt.json) {
        Json j = ideals_json(rs, list, numbering);
        if (anr)
            for (std::size_t i = 0; i < nodes.size(); ++i) j["ideals"][i]["node"] = nodes[i];
        return print_json(j);
    }
    if (fmt.csv) {
        std::cout << (anr ? "node," : "index,") << "dimension,generators\n";
        for (std::size_t i = 0; i < list.size(); ++i)
            std::cout << (anr ? nodes[i] : static_cast<int>(i + 1)) << "," << list[i].size() << ","
                      << csv_field(format_root_set(rs, rs.min_elements(list[i]), numbering)) << "\n";
        return;
    }
    std::cout << list.size() << (anr ? " abelian nilradicals" : maximal ? " maximal abelian ideals" : " abelian ideals")
              << " in " << rs.type().name() << "\n";
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::cout << "  ";
        if (anr)
            std::cout << "node " << nodes[i];
        else
            std::cout << "#" << i + 1;
        std::cout << "  dim " << list[i].size() << "  generators "
                  << braces(format_root_set(rs, rs.min_elements(list[i]), numbering)) << "\n";
    }
}

void cmd_orbits(const RootSystem& rs, Numbering numbering, const RootSet& a, bool dual, bool dims, bool count,
                const Format& fmt) {
    auto records = orbit_table_parallel(rs, a);
    if (count) {
        std::cout << records.size() << "\n";
        return;
    }
    if (fmt.json) return print_json(orbit_table_json(rs, a, records, numbering));
    if (fmt.csv) {
        std::cout << "s,size,dim_in_a,dim_in_a_star,dual,sigma_length,sigma_abs_length\n";
        for (const auto& r : records)
            std::cout << csv_field(format_root_set(rs, r.s, numbering)) << "," << r.s.size() << "," << r.dim_in_a << ","
                      << r.dim_in_a_star << "," << csv_field(format_root_set(rs, r.dual, numbering)) << ","
                      << r.sigma_length << "," << r.sigma_abs_length << "\n";
        return;
    }
    std::cout << records.size() << " B-orbits in the ideal " << braces(format_root_set(rs, a, numbering)) << "\n";
    for (const auto& r : records) {
        std::cout << "  " << braces(format_root_set(rs, r.s, numbering));
        if (dims) std::cout << "  dim O=" << r.dim_in_a << "  dim O*=" << r.dim_in_a_star;
        if (dual) std::cout << "  dual " << braces(format_root_set(rs, r.dual, numbering));
        std::cout << "\n";
    }
    if (dual) {
        // reported, not asserted: the map need not be an involution
        const auto table = duality_table(rs, a);
        std::cout << "duality " << (table.bijective ? "bijective" : "NOT bijective") << "; "
                  << table.non_involutive << " of " << table.sets.size() << " sets have (S^vee)^vee != S\n";
    }
}

void cmd_cascade(const RootSystem& rs, Numbering numbering, const Format& fmt) {
    const RootSet k = kostant_cascade(rs);
    if (fmt.json) {
        Json j;
        j["type"] = rs.type().name();
        j["cascade"] = root_set_json(rs, k, numbering);
        j["index"] = borel_index(rs);
        return print_json(j);
    }
    std::cout << format_root_set(rs, k, numbering) << "\n";
}

void cmd_dual(const RootSystem& rs, Numbering numbering, const RootSet& a, const std::string& set, const Format& fmt) {
    const RootSet s = parse_root_list(rs, set, numbering);
    const RootSet d = pyasetskii_dual(rs, a, s);
    if (fmt.json) {
        Json j;
        j["type"] = rs.type().name();
        j["s"] = root_set_json(rs, s, numbering);
        j["j_s"] = root_set_json(rs, residual_set(rs, a, s), numbering);
        j["dual"] = root_set_json(rs, d, numbering);
        return print_json(j);
    }
    std::cout << format_root_set(rs, d, numbering) << "\n";
}

void cmd_normal_form(const RootSystem& rs, Numbering numbering, const RootSet& a, const std::string& vector,
                     bool dual, bool transcript, const Format& fmt) {
    const StructureTable table(rs);
    const IdealVector v = parse_vector(rs, a, vector, numbering);
    const Side side = dual ? Side::Dual : Side::Primal;
    const Reduction r = reduce(table, v, side);
    if (fmt.json) return print_json(reduction_json(rs, v, r, side, numbering));
    std::cout << format_root_set(rs, r.s, numbering) << "\n";
    if (!transcript) return;
    for (const auto& st : r.transcript.steps)
        std::cout << "  exp(" << to_string(st.t) << " * e[" << format_root(rs, st.delta, numbering) << "])\n";
    for (const auto& f : r.transcript.torus)
        std::cout << "  torus: scale " << format_root(rs, f.root, numbering) << " by " << to_string(f.factor) << "\n";
}

void cmd_structure_table(const RootSystem& rs, Numbering numbering, const Format& fmt) {
    const StructureTable table(rs);
    if (fmt.json) return print_json(structure_table_json(table, numbering));
    const int p = rs.num_positive();
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            const int n = table.n(a, b);
            if (n == 0 || a > b) continue;
            std::cout << "N(" << format_root(rs, a, numbering) << ", " << format_root(rs, b, numbering) << ") = " << n
                      << "\n";
        }
}

void cmd_count_anr(const RootSystem& rs, Numbering numbering, int node, const Format& fmt) {
    std::vector<int> nodes;
    if (node != 0) {
        nodes.push_back(internal_node(rs, numbering, node));
    } else {
        for (const auto& nil : abelian_nilradicals(rs)) nodes.push_back(nil.node);
        require(!nodes.empty(), rs.type().name() + " has no abelian nilradicals");
    }
    std::vector<CountTable> tables;
    for (int n : nodes) tables.push_back(anr_statistic(rs, n));
    if (fmt.json) {
        Json j = Json::array();
        for (const auto& t : tables) {
            Json item = count_table_json(rs, t, numbering);
            auto expected = expected_anr_counts(rs.type(), t.node);
            item["closed_form"] = expected ? Json(*expected) : Json(nullptr);
            j.push_back(std::move(item));
        }
        return print_json(j);
    }
    if (fmt.csv) {
        std::cout << "type,node,k,count\n";
        for (const auto& t : tables)
            for (std::size_t k = 0; k < t.counts.size(); ++k)
                std::cout << t.type.name() << "," << external_node(rs, numbering, t.node) << "," << k << ","
                          << t.counts[k] << "\n";
        return;
    }
    for (const auto& t : tables) {
        std::cout << rs.type().name() << " node " << external_node(rs, numbering, t.node) << ":";
        for (auto c : t.counts) std::cout << " " << c;
        std::cout << " | " << t.total;
        if (auto expected = expected_anr_counts(rs.type(), t.node)) {
            std::vector<std::uint64_t> e = *expected;
            while (!e.empty() && e.back() == 0) e.pop_back();
            std::cout << (e == t.counts ? "  (closed form agrees)" : "  (closed form DISAGREES)");
        }
        std::cout << "\n";
    }
}

void print_report(const RootSystem& rs, Numbering numbering, const ConjectureReport& r) {
    std::cout << "Evidence report for " << rs.type().name();
    if (r.node)
        std::cout << ", abelian nilradical at node " << external_node(rs, numbering, *r.node);
    else
        std::cout << ", maximal abelian ideal " << braces(format_root_set(rs, rs.min_elements(r.ideal), numbering));
    std::cout << " (closure order is not computed)\n";
    std::cout << "  S | l(sigma_S) | rk(1-sigma_S) | (l+#S)/2 | dim O*_S | dim O_S\n";
    for (const auto& row : r.rows) {
        std::cout << "  " << braces(format_root_set(rs, row.s, numbering)) << " | " << row.sigma_length << " | "
                  << row.sigma_abs_length << " | "
                  << (row.parity_ok ? std::to_string(row.formula_twice / 2) : std::to_string(row.formula_twice) + "/2")
                  << " | " << row.dim_actual << " | " << row.dim_in_a << (row.match ? "" : "  MISMATCH") << "\n";
    }
    auto line = [](const char* what, std::size_t n) { std::cout << "  " << what << ": " << n << "\n"; };
    line("dimension formula mismatches", r.formula_mismatches.size());
    line("parity failures", r.parity_failures.size());
    line("Bruhat/dimension monotonicity violations", r.bruhat_violations.size());
    line("covers with dimension gap != 1", r.cover_violations.size());
    line("S minus a root not below S", r.subset_violations.size());
    line("sigma_S not below sigma of C^u", r.not_below_top.size());
    line("Bruhat covers", r.covers.size());
    std::cout << "  sub-poset graded: " << (r.graded ? "yes" : "no")
              << ", rank = (l+#S)/2: " << (r.rank_is_formula ? "yes" : "no") << "\n";
    std::cout << "  consistent with the conjecture: " << (r.consistent() ? "yes" : "no") << "\n";
}

void cmd_conjecture(const RootSystem& rs, Numbering numbering, int node, const IdealOptions& ideal,
                    const Format& fmt) {
    std::vector<ConjectureReport> reports;
    if (ideal.given() > 0) {
        if (node != 0) throw UsageError("--node and an ideal spec are exclusive");
        reports.push_back(maximal_ideal_report(rs, resolve_ideal(rs, ideal.spec(), numbering)));
    } else if (node != 0) {
        reports.push_back(conjecture_check(rs, internal_node(rs, numbering, node)));
    } else {
        for (const auto& nil : abelian_nilradicals(rs)) reports.push_back(conjecture_check(rs, nil.node));
        require(!reports.empty(), rs.type().name() + " has no abelian nilradicals");
    }
    if (fmt.json) {
        Json j = Json::array();
        for (const auto& r : reports) j.push_back(conjecture_report_json(rs, r, numbering));
        return print_json(j);
    }
    for (const auto& r : reports) print_report(rs, numbering, r);
}

void cmd_hasse(const RootSystem& rs, Numbering numbering, int node) {
    std::cout << hasse_dot(rs, conjecture_check(rs, internal_node(rs, numbering, node)), numbering);
}

int cmd_suite(const std::string& only, std::uint64_t seed) {
    SuiteOptions options;
    options.seed = seed;
    if (!only.empty()) options.only = only;
    bool all = true;
    for (const auto& r : run_suite(options)) {
        std::cout << format_result(r) << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

Numbering default_numbering() {
    const char* env = std::getenv("ABELORB_NUMBERING");
    return env && *env ? parse_numbering(env) : Numbering::Bourbaki;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"B-orbits in abelian ideals and their duals"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string numbering_text;
    app.add_option("--numbering", numbering_text,
                   "simple-root numbering: bourbaki (default) or vo; also ABELORB_NUMBERING")
        ->check(CLI::IsMember({"bourbaki", "vo", "vinberg-onishchik"}));

    std::string type_text;
    Format fmt;
    IdealOptions ideal;
    bool flag_abelian = false, flag_maximal = false, flag_anr = false;
    bool flag_dual = false, flag_dims = false, flag_count = false, flag_transcript = false, flag_dot = false;
    std::string set_text, vector_text, only;
    int node = 0;
    std::uint64_t seed = 42;

    auto add_type = [&](CLI::App* cmd) { cmd->add_option("type", type_text, "root system, e.g. D4")->required(); };

    auto* roots = app.add_subcommand("roots", "positive roots of a type");
    add_type(roots);
    fmt.add_to(roots, true);

    auto* ideals = app.add_subcommand("ideals", "abelian ideals of b");
    add_type(ideals);
    ideals->add_flag("--abelian", flag_abelian, "all abelian ideals (default)");
    ideals->add_flag("--maximal", flag_maximal, "maximal abelian ideals only");
    ideals->add_flag("--anr", flag_anr, "abelian nilradicals only");
    fmt.add_to(ideals, true);

    auto* orbits = app.add_subcommand("orbits", "B-orbits in an abelian ideal");
    add_type(orbits);
    ideal.add_to(orbits);
    orbits->add_flag("--dual", flag_dual, "show the Pyasetskii dual of each orbit");
    orbits->add_flag("--dims", flag_dims, "show orbit dimensions");
    orbits->add_flag("--count", flag_count, "print the number of orbits only");
    fmt.add_to(orbits, true);

    auto* cascade = app.add_subcommand("cascade", "Kostant's cascade");
    add_type(cascade);
    fmt.add_to(cascade, false);

    auto* dual = app.add_subcommand("dual", "Pyasetskii dual of a strongly orthogonal set");
    add_type(dual);
    ideal.add_to(dual);
    dual->add_option("--set", set_text, "strongly orthogonal set S")->required();
    fmt.add_to(dual, false);

    auto* nf = app.add_subcommand("normal-form", "reduce a vector (or covector) to its orbit representative");
    add_type(nf);
    ideal.add_to(nf);
    nf->add_option("--vector", vector_text, "root:rational pairs, e.g. \"e1-e4:3/2,e2-e6:-1\"")->required();
    nf->add_flag("--dual", flag_dual, "treat the input as a covector in a*");
    nf->add_flag("--transcript", flag_transcript, "print the reduction steps");
    fmt.add_to(nf, false);

    auto* st = app.add_subcommand("structure-table", "Chevalley structure constants");
    add_type(st);
    fmt.add_to(st, false);

    auto* count = app.add_subcommand("count-anr", "orbit counts by #S for abelian nilradicals");
    add_type(count);
    count->add_option("--node", node, "one node (default: every nilradical node)");
    fmt.add_to(count, true);

    auto* conj = app.add_subcommand("conjecture-check", "Bruhat-order evidence report");
    add_type(conj);
    conj->add_option("--node", node, "abelian-nilradical node");
    conj->add_option("--ideal", ideal.generators, "generators of a maximal abelian ideal that is not a nilradical");
    conj->add_option("--max-abelian", ideal.max_abelian, "index of a maximal abelian ideal that is not a nilradical");
    fmt.add_to(conj, false);

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of {sigma_S} as DOT");
    add_type(hasse);
    hasse->add_option("--node", node, "abelian-nilradical node")->required();
    hasse->add_flag("--dot", flag_dot, "DOT output (the only format)");

    auto* suite = app.add_subcommand("paper-suite", "run every acceptance criterion");
    suite->add_option("--only", only, "one group")->check(CLI::IsMember(suite_groups()));
    suite->add_option("--seed", seed, "seed for randomized criteria (default 42)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (suite->parsed()) return cmd_suite(only, seed);
        const Numbering numbering = numbering_text.empty() ? default_numbering() : parse_numbering(numbering_text);
        const RootSystem rs(SimpleType::parse(type_text));
        auto the_ideal = [&] { return resolve_ideal(rs, ideal.spec(), numbering); };

        if (roots->parsed()) cmd_roots(rs, numbering, fmt);
        else if (ideals->parsed()) cmd_ideals(rs, numbering, flag_maximal, flag_anr, fmt);
        else if (orbits->parsed()) cmd_orbits(rs, numbering, the_ideal(), flag_dual, flag_dims, flag_count, fmt);
        else if (cascade->parsed()) cmd_cascade(rs, numbering, fmt);
        else if (dual->parsed()) cmd_dual(rs, numbering, the_ideal(), set_text, fmt);
        else if (nf->parsed()) cmd_normal_form(rs, numbering, the_ideal(), vector_text, flag_dual, flag_transcript, fmt);
        else if (st->parsed()) cmd_structure_table(rs, numbering, fmt);
        else if (count->parsed()) cmd_count_anr(rs, numbering, node, fmt);
        else if (conj->parsed()) cmd_conjecture(rs, numbering, node, ideal, fmt);
        else if (hasse->parsed()) cmd_hasse(rs, numbering, node);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
