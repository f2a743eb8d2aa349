#include "cli.hpp"

#include "ksba/bounds.hpp"
#include "ksba/classify.hpp"
#include "ksba/cycles.hpp"
#include "ksba/discrepancy.hpp"
#include "ksba/errors.hpp"
#include "ksba/graph.hpp"
#include "ksba/lattice.hpp"
#include "ksba/scenarios.hpp"
#include "ksba/verify.hpp"
#include "ksba/volume.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ksba::cli {

namespace {

struct Printer {
    int digits = -1;

    [[nodiscard]] std::string operator()(const Rational& r) const {
        if (digits < 0 || r.is_integer()) return r.str();
        return r.str() + " (approx " + r.decimal(digits) + ")";
    }
};

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void print_profile(std::ostream& out, const Printer& p, const DiscrepancyProfile& prof) {
    std::size_t w = 4;
    for (const auto& id : prof.ids) w = std::max(w, id.size());
    out << std::left << std::setw(static_cast<int>(w)) << "curve" << "  a_E\n";
    for (std::size_t i = 0; i < prof.ids.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(w)) << prof.ids[i] << "  " << p(prof.a[i]) << "\n";
    }
    for (const auto& c : prof.components) {
        out << "component {";
        for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? "," : "") << prof.ids[c.members[i]];
        out << "}: " << to_string(c.verdict) << "\n";
    }
    out << "minimum a_E: " << p(prof.minimum()) << "\n";
    out << "log canonical: " << (prof.log_canonical() ? "yes" : "no") << "\n";
}

int print_report(std::ostream& out, const Printer& p, const FormulaReport& r) {
    out << r.name;
    for (const auto& [k, v] : r.parameters) out << " " << k << "=" << v;
    out << "\n";
    for (const auto& [k, v] : r.values) out << "  " << k << " = " << p(v) << "\n";
    for (const auto& c : r.claims) out << "  " << (c.pass ? "PASS " : "FAIL ") << c.description << " [" << c.witness << "]\n";
    return r.passed() ? 0 : 1;
}

int cmd_classify(std::ostream& out, const std::string& path) {
    DualGraph g = load_graph(path);
    SingularityType t = classify(g);
    out << "type: " << t.describe() << "\n";
    out << "shape: " << to_string(shape(g).kind) << "\n";
    out << "log canonical: " << (t.log_canonical() ? "yes" : "no") << "\n";
    out << "log terminal: " << (t.log_terminal() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_fundcycle(std::ostream& out, const std::string& path) {
    DualGraph g = load_graph(path);
    LauferTrace tr = laufer(g);
    for (std::size_t i = 0; i < tr.cycle.ids.size(); ++i) out << tr.cycle.ids[i] << ": " << tr.cycle.coefficients[i] << "\n";
    out << "Z = " << tr.cycle.str() << "\n";
    out << "Z^2 = " << self_intersection(g, tr.cycle.coefficients) << "\n";
    out << "degree = " << degree(g, tr.cycle) << "\n";
    out << "iterations = " << tr.iterations << "\n";
    return 0;
}

int cmd_discrepancy(std::ostream& out, const Printer& p, const std::string& path) {
    DualGraph g = load_graph(path);
    if (!is_negative_definite(intersection_matrix(g))) throw NotContractible("intersection matrix is not negative definite");
    print_profile(out, p, discrepancies(g));
    return 0;
}

int print_volume(std::ostream& out, const Printer& p, const ContractionSpec& spec) {
    VolumeResult r = volume(spec);
    out << "ambient K^2 = " << p(r.ambient_k2) << "\n";
    out << "volume K_X^2 = " << p(r.volume) << "\n";
    out << "pullback pi*K_X = " << r.pullback.str() << "\n";
    print_profile(out, p, r.profile);
    StabilityReport st = stability_necessary_checks(spec);
    out << "checks (" << st.scope << "):\n";
    for (const auto& c : st.checks) out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << p(c.value) << "]\n";
    return st.passed() ? 0 : 1;
}

int cmd_formulas(std::ostream& out, const Printer& p, const std::string& which, long n, long l, long l2) {
    if (which == "V") return print_report(out, p, v_report(n, l));
    if (which == "W") return print_report(out, p, w_report(n, l));
    if (which == "minima") return print_report(out, p, minima_and_gap(n));
    if (which == "cases") return print_report(out, p, case_analysis_checks(n, l, l2));
    if (which == "constants") return print_report(out, p, theorem_constants(n));
    throw ParamOutOfRange("unknown formula family " + which);
}

int cmd_tabulate(std::ostream& out, const Printer& p, long n_max, const std::string& csv) {
    if (n_max < 1) throw ParamOutOfRange("need --n-max >= 1");
    const std::vector<std::string> head{"n", "p_g", "w1", "w2_first", "w2_second", "w2", "gap", "gap_first",
                                        "gap_second", "w1_noncomposed", "w2_noncomposed"};
    std::vector<std::vector<std::string>> rows;
    for (long n = 1; n <= n_max; ++n) {
        FormulaReport r = minima_and_gap(n);
        rows.push_back({std::to_string(n), std::to_string(n + 1), r.value("w1").str(), r.value("w2_first").str(),
                        r.value("w2_second").str(), r.value("w2").str(), r.value("gap").str(), r.value("gap_first").str(),
                        r.value("gap_second").str(), r.value("w1_noncomposed").str(), r.value("w2_noncomposed").str()});
        if (!r.passed()) throw FormulaMismatch("gap identity fails at n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "\t" : "") << head[i];
    out << "\n";
    for (long n = 1; n <= n_max; ++n) {
        const auto& row = rows[static_cast<std::size_t>(n - 1)];
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "\t" : "") << (i >= 2 ? p(Rational::parse(row[i])) : row[i]);
        }
        out << "\n";
    }
    if (n_max >= 1) out << "note: at n=1 the second gap branch is 0 while the genus 2 case has gap 1/3\n";
    if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw SchemaError("cannot write " + csv);
        for (std::size_t i = 0; i < head.size(); ++i) f << (i ? "," : "") << head[i];
        f << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
            f << "\n";
        }
    }
    return 0;
}

int cmd_example(std::ostream& out, const Printer& p, const std::string& name, const Params& given,
                const std::string& emit) {
    Scenario s = build(name, given);
    out << "scenario " << s.name << ": " << s.title << "\n";
    out << "parameters:";
    if (s.params.empty()) out << " none";
    for (const auto& [k, v] : s.params) out << " " << k << "=" << v;
    out << "\n";
    out << "contract: ";
    for (std::size_t i = 0; i < s.spec.contracted.size(); ++i) out << (i ? "," : "") << s.spec.contracted[i];
    out << "\n";
    out << "p_g = " << s.expected_pg << "\n";
    int code = print_volume(out, p, s.spec);
    VolumeResult r = volume(s.spec);
    out << "expected volume = " << p(s.expected_volume) << (r.volume == s.expected_volume ? " (match)" : " (MISMATCH)")
        << "\n";
    DualGraph g = contracted_graph(s.spec);
    for (const auto& idx : g.components()) {
        DualGraph sub = g.induced(idx);
        out << "singularity {";
        for (std::size_t i = 0; i < sub.size(); ++i) out << (i ? "," : "") << sub.vertex(i).id;
        out << "}: " << classify(sub).describe() << "\n";
    }
    if (!emit.empty()) {
        std::ofstream f(emit);
        if (!f) throw SchemaError("cannot write " + emit);
        f << serialize_lattice(s.spec.lattice) << "\n";
        out << "lattice written to " << emit << "\n";
    }
    return r.volume == s.expected_volume ? code : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculator for log canonical surface singularities and volumes of stable surfaces", "ksba"};
    app.require_subcommand(1);
    int digits = -1;
    app.add_option("--decimal", digits, "Also print rounded decimals with this many digits")->check(CLI::Range(0, 60));

    std::string path;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a resolution graph");
    classify_cmd->add_option("graph", path, "Graph JSON file")->required();
    auto* fund_cmd = app.add_subcommand("fundcycle", "Fundamental cycle by Laufer's algorithm");
    fund_cmd->add_option("graph", path, "Graph JSON file")->required();
    auto* disc_cmd = app.add_subcommand("discrepancy", "Discrepancies of a resolution graph");
    disc_cmd->add_option("graph", path, "Graph JSON file")->required();

    std::string contract;
    auto* vol_cmd = app.add_subcommand("volume", "Volume after contracting curves of a lattice");
    vol_cmd->add_option("--lattice", path, "Lattice JSON file")->required();
    vol_cmd->add_option("--contract", contract, "Comma separated labels")->required();

    std::string which;
    long n = 4, l = 1, l2 = 1;
    auto* form_cmd = app.add_subcommand("formulas", "Evaluate the volume formulas");
    form_cmd->add_option("family", which, "V, W, minima, cases or constants")
        ->required()
        ->check(CLI::IsMember({"V", "W", "minima", "cases", "constants"}));
    form_cmd->add_option("--n", n, "n = p_g - 1 (p_g for constants)");
    form_cmd->add_option("--l", l, "l, or l1 for cases");
    form_cmd->add_option("--l2", l2, "l2 for cases");

    long n_max = 10;
    std::string csv;
    auto* tab_cmd = app.add_subcommand("tabulate", "Table of w1, w2 and the gap");
    tab_cmd->add_option("--n-max", n_max, "Largest n");
    tab_cmd->add_option("--csv", csv, "Also write CSV with exact p/q strings");

    std::string name, emit;
    long en = 0, ed = 0, eN = 0;
    auto* ex_cmd = app.add_subcommand("example", "Build a catalog scenario and compute its volume");
    ex_cmd->add_option("name", name, "Scenario name")->required();
    auto* on = ex_cmd->add_option("--n", en, "n");
    auto* od = ex_cmd->add_option("--d", ed, "d");
    auto* oN = ex_cmd->add_option("--N", eN, "N");
    ex_cmd->add_option("--emit", emit, "Write the lattice JSON");

    long vn = 100;
    bool sequential = false;
    auto* ver_cmd = app.add_subcommand("verify-paper", "Run the full verification suite");
    ver_cmd->add_option("--n-max", vn, "Range of the formula sweeps")->check(CLI::Range(4L, 100000L));
    ver_cmd->add_flag("--sequential", sequential, "Run checks one after another");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    Printer p{digits};
    try {
        if (*classify_cmd) return cmd_classify(out, path);
        if (*fund_cmd) return cmd_fundcycle(out, path);
        if (*disc_cmd) return cmd_discrepancy(out, p, path);
        if (*vol_cmd) return print_volume(out, p, {load_lattice(path), split_ids(contract)});
        if (*form_cmd) return cmd_formulas(out, p, which, n, l, l2);
        if (*tab_cmd) return cmd_tabulate(out, p, n_max, csv);
        if (*ex_cmd) {
            Params given;
            if (on->count()) given["n"] = en;
            if (od->count()) given["d"] = ed;
            if (oN->count()) given["N"] = eN;
            return cmd_example(out, p, name, given, emit);
        }
        if (*ver_cmd) {
            VerifyOptions o;
            o.n_max = vn;
            o.concurrent = !sequential;
            VerifyOutcome v = verify_paper(o);
            out << v.report();
            return v.exit_code();
        }
    } catch (const UnknownScenario& e) {
        err << "error: " << e.what() << "\n";
        err << "known scenarios:";
        for (const auto& s : scenario_names()) err << " " << s;
        err << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace ksba::cli
