#include "superwedge/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11/CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "superwedge/catalog.hpp"
#include "superwedge/formats.hpp"
#include "superwedge/hopf.hpp"
#include "superwedge/wedge.hpp"

namespace superwedge {

namespace {

using nlohmann::json;

// Input error with a ready-made exit code.
struct CliError {
    int code;
    std::string message;
};

struct Options {
    std::string source;
    std::string route = "wedge";
    std::uint64_t seed = SaturationConfig{}.seed;
    std::optional<std::size_t> batch;
    std::size_t stable_rounds = SaturationConfig{}.stable_rounds;
    std::string json_out;
    std::vector<std::string> ideal;
    std::string table;
    std::size_t max_m = 2, max_n = 2, max_odd = 3;
    std::string catalog_action;
    std::string catalog_id;
    std::string out_path;

    SaturationConfig config() const {
        SaturationConfig c;
        c.seed = seed;
        c.batch = batch;
        c.stable_rounds = stable_rounds;
        return c;
    }
};

std::string dim_string(const SuperAlgebra& a) { return fmt::format("({}|{})", a.even_dim(), a.odd_dim()); }

// "x1 + 2*z - 1/2*y1"
std::string combination(const SuperAlgebra& a, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Scalar c = v[i];
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        c = abs(c);
        if (c != 1) out += to_string(c) + "*";
        out += a.basis_names()[i];
    }
    return out.empty() ? "0" : out;
}

SuperAlgebra load_source(const std::string& source) {
    if (source.rfind("catalog:", 0) == 0) {
        try {
            return resolve(source.substr(8)).algebra;
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitParse, e.what()};
        }
    }
    try {
        return load_algebra(source);
    } catch (const FormatError& e) {
        throw CliError{kExitParse, source + ":" + e.what()};
    } catch (const std::runtime_error& e) {
        throw CliError{kExitParse, e.what()};
    }
}

void require_valid(const SuperAlgebra& a, std::ostream& err) {
    const ValidationReport r = validate(a);
    if (r.ok()) return;
    err << "invalid algebra " << a.name() << ":\n";
    for (const auto& v : r.violations) {
        std::string where;
        for (auto i : v.indices) where += (where.empty() ? "" : ", ") + a.basis_names()[i];
        err << fmt::format("  {} fails at ({}): residual {}\n", identity_name(v.identity), where,
                           combination(a, v.residual));
    }
    throw CliError{kExitInvalid, ""};
}

bool is_nilpotent(const SuperAlgebra& a) { return lower_central_series(a).nilpotency_class.has_value(); }

void print_reports(std::ostream& out, const SuperAlgebra& a, const std::vector<std::pair<std::string, B0Report>>& rs) {
    out << fmt::format("algebra {} {}\n", a.name(), dim_string(a));
    std::string header = fmt::format("{:<16}", "");
    for (const auto& [route, r] : rs) header += fmt::format(" {:>18}", route);
    out << header << "\n";
    auto row = [&](const char* label, auto get) {
        std::string line = fmt::format("{:<16}", label);
        for (const auto& [route, r] : rs) line += fmt::format(" {:>18}", get(r));
        out << line << "\n";
    };
    row("dim L^2", [](const B0Report& r) { return std::to_string(r.dims.derived); });
    row("dim L^L", [](const B0Report& r) { return std::to_string(r.dims.exterior_square); });
    row("dim M(L)", [](const B0Report& r) { return std::to_string(r.dims.schur); });
    row("dim M0 found", [](const B0Report& r) { return std::to_string(r.dims.m0_found); });
    row("dim B0", [](const B0Report& r) { return std::to_string(r.dims.b0_bound); });
    row("dim curly", [](const B0Report& r) { return std::to_string(r.dims.curly()); });
    row("status", [](const B0Report& r) { return status_string(r); });
    row("witnesses", [](const B0Report& r) { return std::to_string(r.witnesses.size()); });
    row("rounds", [](const B0Report& r) { return fmt::format("{} ({} stable)", r.rounds, r.rounds_stable); });
    const B0Report& any = rs.front().second;
    out << fmt::format("seed {:#x}  batch {}  stable-rounds {}\n", any.seed, any.batch, any.stable_rounds);
}

bool routes_agree(const B0Report& w, const B0Report& h) {
    return w.dims.schur == h.dims.schur && w.dims.b0_bound == h.dims.b0_bound && w.status == h.status;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const SuperAlgebra a = load_source(o.source);
    require_valid(a, err);
    out << "OK " << a.name() << " " << dim_string(a) << "\n";
    return kExitOk;
}

int cmd_bogomolov(const Options& o, std::ostream& out, std::ostream& err) {
    const SuperAlgebra a = load_source(o.source);
    require_valid(a, err);
    const SaturationConfig cfg = o.config();
    const bool nilpotent = is_nilpotent(a);
    if (o.route == "hopf" && !nilpotent) {
        err << NotNilpotentError(a.name()).what() << "\n";
        return kExitNotNilpotent;
    }
    ReportFile report;
    report.tool_version = tool_version();
    report.route = o.route;
    report.algebra = a;
    std::vector<std::pair<std::string, B0Report>> shown;
    if (o.route != "hopf") {
        report.wedge = bogomolov(a, cfg);
        shown.emplace_back("wedge", *report.wedge);
    }
    if (o.route == "hopf" || (o.route == "both" && nilpotent)) {
        report.hopf = hopf_bogomolov(a, cfg);
        shown.emplace_back("hopf", *report.hopf);
    }
    print_reports(out, a, shown);
    if (o.route == "both" && !nilpotent) out << "hopf route skipped: not nilpotent\n";
    if (!o.json_out.empty()) write_file(o.json_out, report_json(report));
    if (report.wedge && report.hopf) {
        if (!routes_agree(*report.wedge, *report.hopf)) {
            err << "route disagreement: wedge " << status_string(*report.wedge) << " vs hopf "
                << status_string(*report.hopf) << "\n";
            return kExitDisagreement;
        }
        out << "routes agree\n";
    }
    return kExitOk;
}

int cmd_schur(const Options& o, std::ostream& out, std::ostream& err) {
    const SuperAlgebra a = load_source(o.source);
    require_valid(a, err);
    const bool nilpotent = is_nilpotent(a);
    if (o.route == "hopf" && !nilpotent) {
        err << NotNilpotentError(a.name()).what() << "\n";
        return kExitNotNilpotent;
    }
    std::optional<std::size_t> wedge_dim, hopf_dim;
    if (o.route != "hopf") wedge_dim = schur_multiplier(exterior_square(a)).dim();
    if (o.route == "hopf" || (o.route == "both" && nilpotent)) hopf_dim = hopf_schur(a);
    out << fmt::format("algebra {} {}\n", a.name(), dim_string(a));
    if (wedge_dim) out << fmt::format("dim M(L) wedge {}\n", *wedge_dim);
    if (hopf_dim) out << fmt::format("dim M(L) hopf  {}\n", *hopf_dim);
    if (wedge_dim && hopf_dim && *wedge_dim != *hopf_dim) {
        err << "route disagreement on dim M(L)\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

int cmd_curly(const Options& o, std::ostream& out, std::ostream& err) {
    const SuperAlgebra a = load_source(o.source);
    require_valid(a, err);
    const B0Report r = bogomolov(a, o.config());
    out << fmt::format("algebra {} {}\n", a.name(), dim_string(a));
    out << fmt::format("dim L^L {}  dim M0 found {}  dim curly square {}  dim L^2 {}  dim B0 {}  {}\n",
                       r.dims.exterior_square, r.dims.m0_found, r.dims.curly(), r.dims.derived, r.dims.b0_bound,
                       status_string(r));
    return kExitOk;
}

int cmd_cpcheck(const Options& o, std::ostream& out, std::ostream& err) {
    const SuperAlgebra a = load_source(o.source);
    require_valid(a, err);
    std::vector<Vector> gens;
    for (const auto& s : o.ideal) {
        auto i = a.index_of(s);
        if (!i) throw CliError{kExitParse, "unknown symbol in --ideal: " + s};
        gens.push_back(a.basis_vector(*i));
    }
    const GradedSubspace m = GradedSubspace::span_components(a, gens);
    CpResult r;
    try {
        r = cp_check_central_extension(a, m, o.config());
    } catch (const NotCentralError& e) {
        err << fmt::format("ideal is not central: [{}, {}] = {}\n", combination(a, e.ideal_vector),
                           a.basis_names()[e.basis_index], combination(a, e.bracket));
        return kExitInvalid;
    }
    if (r.status == CpStatus::kStableYes) {
        out << "CP_STABLE_YES\n";
        return kExitOk;
    }
    const CpWitness& w = *r.witness;
    out << "CP_CERTIFIED_NO\n";
    out << fmt::format("witness x = {} ({}), y = {} ({}), [x,y] = {}\n", combination(a, w.x), to_string(w.px),
                       combination(a, w.y), to_string(w.py), combination(a, w.value));
    return kExitCpCertifiedNo;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream&) {
    if (o.catalog_action == "list") {
        for (const auto& e : catalog_list()) {
            std::string line = fmt::format("{:<28} {:<7} B0 {:<8} {}", e.id, dim_string(e.algebra),
                                           e.expected.b0_trivial ? "= 0" : "!= 0", e.expected.source);
            if (!e.params.empty()) line += "  [" + format_params(e.params) + "]";
            for (const auto& alias : e.aliases) line += "  alias " + alias;
            for (const auto& c : e.corrections) line += "  corrected: " + c;
            out << line << "\n";
        }
        return kExitOk;
    }
    CatalogEntry e;
    try {
        e = resolve(o.catalog_id);
    } catch (const std::invalid_argument& ex) {
        throw CliError{kExitParse, ex.what()};
    }
    const std::string text = algebra_json(e.algebra);
    if (o.out_path.empty()) {
        out << text;
    } else {
        write_file(o.out_path, text);
    }
    return kExitOk;
}

struct Row {
    std::string id;
    SuperAlgebra algebra;
    bool expect_trivial = true;
    B0Report report;
    bool matches = false;
};

std::vector<Row> reproduce_rows(const Options& o) {
    std::vector<Row> rows;
    if (o.table == "heisenberg") {
        for (std::size_t m = 0; m <= o.max_m; ++m) {
            for (std::size_t n = 0; n <= o.max_n; ++n) {
                if (m + n == 0) continue;
                rows.push_back({heisenberg_special(m, n).name(), heisenberg_special(m, n), true, {}, false});
            }
        }
        for (std::size_t m = 1; m <= o.max_odd; ++m) rows.push_back({heisenberg_odd(m).name(), heisenberg_odd(m), true, {}, false});
        return rows;
    }
    const bool trivial = o.table == "backhouse-trivial";
    for (const auto& f : backhouse_families()) {
        if (f.trivial != trivial) continue;
        for (const auto& p : f.samples) {
            CatalogEntry e = backhouse_entry(f.id, p);
            rows.push_back({e.algebra.name(), e.algebra, e.expected.b0_trivial, {}, false});
        }
    }
    return rows;
}

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<Row> rows = reproduce_rows(o);
    const SaturationConfig cfg = o.config();
    for (auto& r : rows) {
        require_valid(r.algebra, err);
        r.report = bogomolov(r.algebra, cfg);
        r.matches = r.expect_trivial == (r.report.status == B0Status::kCertifiedZero);
    }
    out << "| id | dim | L^2 | L^L | M(L) | M0 | B0 | status | expected | match |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|\n";
    json jrows = json::array();
    std::vector<std::string> mismatches;
    for (const auto& r : rows) {
        const B0Dims& d = r.report.dims;
        out << fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n", r.id, dim_string(r.algebra),
                           d.derived, d.exterior_square, d.schur, d.m0_found, d.b0_bound, status_string(r.report),
                           r.expect_trivial ? "B0 = 0" : "B0 != 0", r.matches ? "yes" : "NO");
        if (!r.matches) mismatches.push_back(r.id);
        jrows.push_back({{"id", r.id},
                         {"algebra_hash", algebra_hash(r.algebra)},
                         {"dims", {{"derived", d.derived},
                                   {"exterior_square", d.exterior_square},
                                   {"schur", d.schur},
                                   {"m0_found", d.m0_found},
                                   {"b0", d.b0_bound},
                                   {"curly_square", d.curly()}}},
                         {"status", status_string(r.report)},
                         {"witnesses", r.report.witnesses.size()},
                         {"rounds", r.report.rounds},
                         {"expected_b0_trivial", r.expect_trivial},
                         {"matches", r.matches}});
    }
    if (!o.json_out.empty()) {
        json doc = {{"tool", {{"name", "superwedge"}, {"version", tool_version()}}},
                    {"table", o.table},
                    {"config", {{"seed", cfg.seed}, {"batch", cfg.batch ? json(*cfg.batch) : json("16*dim^2")},
                                {"stable_rounds", cfg.stable_rounds}}},
                    {"rows", jrows}};
        write_file(o.json_out, doc.dump(2) + "\n");
    }
    out << fmt::format("{} rows, {} mismatches\n", rows.size(), mismatches.size());
    if (mismatches.empty()) return kExitOk;
    err << "rows differing from the expected result:\n";
    for (const auto& id : mismatches) err << "  " << id << "\n";
    return kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    ReportFile r;
    try {
        r = parse_report(read_file(o.source));
    } catch (const FormatError& e) {
        throw CliError{kExitParse, o.source + ":" + e.what()};
    } catch (const std::runtime_error& e) {
        throw CliError{kExitParse, e.what()};
    }
    if (!verify_report(r)) {
        out << "witnesses FAILED verification\n";
        return kExitInvalid;
    }
    out << "witnesses OK\n";
    return kExitOk;
}

void add_config_flags(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "saturation RNG seed");
    sub->add_option("--batch", o.batch, "random samples per round (default 16*dim^2)");
    sub->add_option("--stable-rounds", o.stable_rounds, "rounds without growth before stopping");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exterior squares, Schur and Bogomolov multipliers of Lie superalgebras", "superwedge"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);
    const std::vector<std::string> routes{"wedge", "hopf", "both"};

    auto* validate_cmd = app.add_subcommand("validate", "check the Lie superalgebra identities");
    validate_cmd->add_option("source", o.source, "AlgebraFile path or catalog:<id>")->required();

    auto* bogomolov_cmd = app.add_subcommand("bogomolov", "compute B0 with witnesses");
    bogomolov_cmd->add_option("source", o.source, "AlgebraFile path or catalog:<id>")->required();
    bogomolov_cmd->add_option("--route", o.route, "wedge, hopf or both")->check(CLI::IsMember(routes));
    bogomolov_cmd->add_option("--json", o.json_out, "write a report file");
    add_config_flags(bogomolov_cmd, o);

    auto* schur_cmd = app.add_subcommand("schur", "compute dim M(L)");
    schur_cmd->add_option("source", o.source, "AlgebraFile path or catalog:<id>")->required();
    schur_cmd->add_option("--route", o.route, "wedge, hopf or both")->check(CLI::IsMember(routes));

    auto* curly_cmd = app.add_subcommand("curly", "compute dim of the curly exterior square");
    curly_cmd->add_option("source", o.source, "AlgebraFile path or catalog:<id>")->required();
    add_config_flags(curly_cmd, o);

    auto* cp_cmd = app.add_subcommand("cpcheck", "CP test for the central extension by an ideal");
    cp_cmd->add_option("source", o.source, "AlgebraFile path or catalog:<id>")->required();
    cp_cmd->add_option("--ideal", o.ideal, "basis symbols spanning the ideal")->required();
    add_config_flags(cp_cmd, o);

    auto* catalog_cmd = app.add_subcommand("catalog", "list or export builtin algebras");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "print ids with expected results");
    auto* export_cmd = catalog_cmd->add_subcommand("export", "write an AlgebraFile");
    export_cmd->add_option("id", o.catalog_id, "catalog id")->required();
    export_cmd->add_option("--out", o.out_path, "output path (default stdout)");

    auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute a results table");
    reproduce_cmd->add_option("table", o.table, "heisenberg, backhouse-trivial or backhouse-nontrivial")
        ->required()
        ->check(CLI::IsMember({"heisenberg", "backhouse-trivial", "backhouse-nontrivial"}));
    reproduce_cmd->add_option("--max-m", o.max_m, "largest m for special Heisenberg rows");
    reproduce_cmd->add_option("--max-n", o.max_n, "largest n for special Heisenberg rows");
    reproduce_cmd->add_option("--max-odd", o.max_odd, "largest m for odd-center Heisenberg rows");
    reproduce_cmd->add_option("--json", o.json_out, "write the table as JSON");
    add_config_flags(reproduce_cmd, o);

    auto* verify_cmd = app.add_subcommand("verify", "re-check the witnesses of a report file");
    verify_cmd->add_option("report", o.source, "report written by bogomolov --json")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*validate_cmd) return cmd_validate(o, out, err);
        if (*bogomolov_cmd) return cmd_bogomolov(o, out, err);
        if (*schur_cmd) return cmd_schur(o, out, err);
        if (*curly_cmd) return cmd_curly(o, out, err);
        if (*cp_cmd) return cmd_cpcheck(o, out, err);
        if (*catalog_cmd) {
            o.catalog_action = *list_cmd ? "list" : "export";
            return cmd_catalog(o, out, err);
        }
        if (*reproduce_cmd) return cmd_reproduce(o, out, err);
        if (*verify_cmd) return cmd_verify(o, out, err);
    } catch (const CliError& e) {
        if (!e.message.empty()) err << e.message << "\n";
        return e.code;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}

}  // namespace superwedge
