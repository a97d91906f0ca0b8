// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is nonzero when a criterion fails, except for criteria listed in
// kKnownFailures, which still print FAIL with the reason. `--strict` makes
// known failures count too.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <fmt/core.h>

#include "oracles.hpp"
#include "superwedge/catalog.hpp"
#include "superwedge/cli.hpp"
#include "superwedge/formats.hpp"
#include "superwedge/hopf.hpp"
#include "superwedge/wedge.hpp"

using namespace superwedge;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kHeisenbergSecondsPerRun = 10.0;
constexpr double kGridSeconds = 300.0;
constexpr std::size_t kPerturbations = 100;
constexpr std::uint64_t kPerturbationSeed = 2024;

struct KnownFailure {
    int criterion;
    const char* reason;
};

// The nontrivial (2|2) families L11 and L12 have an odd commuting pair whose
// existence over Q needs 1 - 4p^2 (L11) or 1 + 4p^2 (L12) to be a rational
// square. At the samples p in {1/2, 1, 2} this fails five times and the
// witness search leaves a one-dimensional residual that the Hopf route
// reproduces independently, so the table cannot be reproduced as stated.
const KnownFailure kKnownFailures[] = {
    {2, "backhouse-nontrivial: L11 at p=1,2 and L12 at p=1/2,1,2 keep B0 = 1 (discriminant not a rational square)"},
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_nilpotent(const SuperAlgebra& a) { return lower_central_series(a).nilpotency_class.has_value(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int cli(std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = run_cli(args, o, e);
    if (out) *out = o.str() + e.str();
    return code;
}

Outcome heisenberg_triviality() {
    Outcome r;
    std::vector<SuperAlgebra> algebras;
    for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}) algebras.push_back(heisenberg_special(m, n));
    for (std::size_t m = 1; m <= 3; ++m) algebras.push_back(heisenberg_odd(m));
    double slowest = 0;
    for (const auto& l : algebras) {
        const auto start = Clock::now();
        const auto report = bogomolov(l);
        const double t = seconds_since(start);
        slowest = std::max(slowest, t);
        if (report.status != B0Status::kCertifiedZero || report.dims.b0_bound != 0) {
            r.fail(l.name() + " is " + status_string(report));
        }
        if (!verify_witnesses(l, exterior_square(l), report.witnesses)) r.fail(l.name() + " witnesses do not verify");
        if (t >= kHeisenbergSecondsPerRun) r.fail(fmt::format("{} took {:.2f} s", l.name(), t));
    }
    if (r.pass) r.detail = fmt::format("{} algebras CERTIFIED_ZERO, slowest {:.2f} s", algebras.size(), slowest);
    return r;
}

Outcome backhouse_tables() {
    Outcome r;
    const auto start = Clock::now();
    std::string trivial, nontrivial;
    const int a = cli({"reproduce", "backhouse-trivial"}, &trivial);
    const int b = cli({"reproduce", "backhouse-nontrivial"}, &nontrivial);
    const double t = seconds_since(start);
    if (a != kExitOk) r.fail(fmt::format("backhouse-trivial exit {}", a));
    if (b != kExitOk) {
        std::string ids;
        std::istringstream lines(nontrivial);
        for (std::string line; std::getline(lines, line);) {
            if (line.rfind("  ", 0) == 0) ids += (ids.empty() ? "" : ",") + line.substr(2);
        }
        r.fail(fmt::format("backhouse-nontrivial exit {} ({})", b, ids));
    }
    if (t >= kGridSeconds) r.fail(fmt::format("grid took {:.1f} s", t));
    if (r.pass) r.detail = fmt::format("both tables exit 0 in {:.2f} s", t);
    return r;
}

Outcome nonzero_case() {
    Outcome r;
    const auto l = resolve("thm58").algebra;
    const auto wedge = bogomolov(l);
    const auto hopf = hopf_bogomolov(l);
    if (wedge.status != B0Status::kStableNonzero || wedge.dims.b0_bound < 1) r.fail("wedge route " + status_string(wedge));
    if (wedge.stable_rounds != 3 || wedge.seed != 0xB060) r.fail("not run at the default configuration");
    if (hopf.status != wedge.status || hopf.dims.b0_bound != wedge.dims.b0_bound) {
        r.fail("hopf route " + status_string(hopf) + " vs wedge " + status_string(wedge));
    }
    if (r.pass) r.detail = "wedge and hopf routes both " + status_string(wedge);
    return r;
}

Outcome oracle_equivalence() {
    Outcome r;
    std::vector<std::pair<std::string, SuperAlgebra>> inputs;
    for (const auto& e : catalog_list()) inputs.emplace_back(e.id, e.algebra);
    for (const auto& f : backhouse_families()) {
        for (const auto& p : f.samples) inputs.emplace_back(f.id + format_params(p), backhouse(f.id, p));
    }
    std::size_t compared = 0;
    for (const auto& [id, l] : inputs) {
        if (l.dim() > 7 || !is_nilpotent(l)) continue;
        const auto w = bogomolov(l);
        const auto h = hopf_bogomolov(l);
        ++compared;
        if (w.dims.schur != h.dims.schur) r.fail(fmt::format("{}: M(L) {} vs {}", id, w.dims.schur, h.dims.schur));
        if (w.status != h.status || w.dims.b0_bound != h.dims.b0_bound) {
            r.fail(id + ": " + status_string(w) + " vs " + status_string(h));
        }
    }
    if (r.pass) r.detail = fmt::format("{} nilpotent algebras agree", compared);
    return r;
}

Outcome abelian_schur() {
    Outcome r;
    std::size_t checked = 0;
    for (std::size_t m = 0; m <= 5; ++m) {
        for (std::size_t n = 0; m + n <= 5; ++n) {
            if (m + n == 0) continue;
            const std::size_t expected = ((m + n) * (m + n) + n - m) / 2;
            const std::size_t got = schur_multiplier(exterior_square(abelian(m, n))).dim();
            ++checked;
            if (got != expected) r.fail(fmt::format("A({}|{}): {} vs {}", m, n, got, expected));
        }
    }
    if (r.pass) r.detail = fmt::format("{} abelian algebras match", checked);
    return r;
}

Outcome exact_sequence() {
    Outcome r;
    std::size_t checked = 0;
    for (const auto& e : catalog_list()) {
        const auto report = bogomolov(e.algebra);
        const auto curly = curly_square(e.algebra);
        const std::size_t derived = oracle::derived_dim(e.algebra);
        ++checked;
        if (curly.dim != report.dims.b0_bound + derived) {
            r.fail(fmt::format("{}: curly {} vs B0 {} + L^2 {}", e.id, curly.dim, report.dims.b0_bound, derived));
        }
        if (report.dims.exterior_square != report.dims.schur + derived) r.fail(e.id + ": L^L != M(L) + L^2");
    }
    if (r.pass) r.detail = fmt::format("{} catalog algebras", checked);
    return r;
}

Outcome direct_sum_additivity() {
    Outcome r;
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"heisenberg_special(1,0)", "abelian(0,1)"},
        {"heisenberg_special(1,1)", "abelian(1,1)"},
        {"heisenberg_special(2,1)", "abelian(2,0)"},
        {"heisenberg_special(0,2)", "abelian(1,2)"},
        {"heisenberg_odd(2)", "abelian(1,0)"},
        {"filiform5", "abelian(1,0)"},
        {"filiform5", "heisenberg_odd(1)"},
        {"nontrivial:L9_(2,2)", "heisenberg_special(1,0)"},
        {"nontrivial:L_(1,1)", "trivial:L_(1,1)"},
        {"heisenberg_special(1,1)", "heisenberg_odd(1)"},
    };
    for (const auto& [a, b] : pairs) {
        const auto l1 = resolve(a).algebra, l2 = resolve(b).algebra;
        const auto sum = bogomolov(direct_sum(l1, l2)).dims.b0_bound;
        const auto parts = bogomolov(l1).dims.b0_bound + bogomolov(l2).dims.b0_bound;
        if (sum != parts) r.fail(fmt::format("{} + {}: {} vs {}", a, b, sum, parts));
    }
    if (r.pass) r.detail = fmt::format("{} pairs", pairs.size());
    return r;
}

Outcome validation_suite() {
    Outcome r;
    const auto entries = catalog_list();
    for (const auto& e : entries) {
        if (!validate(e.algebra).ok()) r.fail(e.id + " fails validate unperturbed");
    }
    std::mt19937_64 rng(kPerturbationSeed);
    std::size_t done = 0, redrawn = 0;
    while (done < kPerturbations) {
        const auto& l = entries[rng() % entries.size()].algebra;
        if (l.dim() == 0) continue;
        const std::size_t i = rng() % l.dim(), j = rng() % l.dim(), k = rng() % l.dim();
        auto bad = l;
        auto v = bad.structure(i, j);
        v[k] += 1;
        bad.set_structure(i, j, v);
        const auto expected = oracle::first_broken_identity(bad);
        if (!expected) {
            // e.g. a symmetric odd-odd entry edited into another valid table
            ++redrawn;
            continue;
        }
        ++done;
        const auto report = validate(bad);
        if (report.ok()) {
            r.fail(fmt::format("{} edit ({},{},{}) accepted", l.name(), i, j, k));
        } else if (!report.names(static_cast<Identity>(*expected))) {
            r.fail(fmt::format("{} edit ({},{},{}) does not name {}", l.name(), i, j, k,
                               identity_name(static_cast<Identity>(*expected))));
        }
    }
    if (r.pass) r.detail = fmt::format("{} unperturbed pass, {} perturbations rejected ({} redrawn)", entries.size(), done, redrawn);
    return r;
}

Outcome determinism() {
    Outcome r;
    const auto dir = std::filesystem::temp_directory_path() / "superwedge_acceptance";
    std::filesystem::create_directories(dir);
    for (const char* table : {"heisenberg", "backhouse-trivial", "backhouse-nontrivial"}) {
        const auto a = (dir / (std::string(table) + ".1.json")).string();
        const auto b = (dir / (std::string(table) + ".2.json")).string();
        cli({"reproduce", table, "--json", a});
        cli({"reproduce", table, "--json", b});
        if (!std::filesystem::exists(a) || read_file(a).empty()) {
            r.fail(std::string(table) + ": no report written");
        } else if (read_file(a) != read_file(b)) {
            r.fail(std::string(table) + ": reports differ");
        }
    }
    std::filesystem::remove_all(dir);
    if (r.pass) r.detail = "3 tables byte-identical across two runs";
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"heisenberg triviality", heisenberg_triviality},
        {"backhouse tables", backhouse_tables},
        {"nonzero filiform case", nonzero_case},
        {"wedge/hopf equivalence", oracle_equivalence},
        {"abelian schur formula", abelian_schur},
        {"exact sequence", exact_sequence},
        {"direct-sum additivity", direct_sum_additivity},
        {"validation perturbations", validation_suite},
        {"reproduce determinism", determinism},
    };
    int unexpected = 0, known = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        const int number = static_cast<int>(c + 1);
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const KnownFailure* excuse = nullptr;
        for (const auto& k : kKnownFailures) {
            if (k.criterion == number) excuse = &k;
        }
        std::cout << fmt::format("{} {} {}: {}", o.pass ? "PASS" : "FAIL", number, criteria[c].first, o.detail);
        if (!o.pass && excuse) std::cout << fmt::format(" [known failure: {}]", excuse->reason);
        std::cout << "\n" << std::flush;
        if (!o.pass) (excuse && !strict ? known : unexpected)++;
        if (o.pass && excuse) std::cout << fmt::format("note: criterion {} listed as a known failure now passes\n", number);
    }
    std::cout << fmt::format("{} of {} criteria pass, {} known failure(s), {} unexpected failure(s)\n",
                             criteria.size() - static_cast<std::size_t>(known + unexpected), criteria.size(), known,
                             unexpected);
    return unexpected == 0 ? 0 : 1;
}
