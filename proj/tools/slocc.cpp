// Copyright 2026 The slocc-rank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// slocc: rank signatures, classification, invariants, property checks and
// table reproduction for multiqubit pure states.

#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "slocc/errors.h"
#include "slocc/family.h"
#include "slocc/invariants.h"
#include "slocc/scalar_text.h"
#include "slocc/separability.h"
#include "slocc/state_io.h"
#include "slocc/tables.h"
#include "slocc/verify.h"

namespace {

using namespace slocc;
using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kNumeric = 3, kVerification = 4 };

// Raised when a check or table reports a mismatch.
struct VerificationFailure {
    int code = kVerification;
};

struct Config {
    std::string mode = "auto";
    double tolerance = 0.0;
    std::optional<std::uint64_t> seed;
    std::string output = "text";
    std::string registry_file;
    int trials = 100;
    int samples = 20;
    int scan = 10000;
    std::string bits;
};

bool machine(const Config &c) {
    return c.output == "machine";
}

std::uint64_t effective_seed(const Config &c) {
    if (c.seed) {
        return *c.seed;
    }
    if (const char *env = std::getenv("SLOCC_RANK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw DomainError(std::string("SLOCC_RANK_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AnyState load_state(const std::string &path) {
    try {
        return parse_state(read_file(path));
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Exact by default for exact input; --mode exact on floating input is an error.
RankMode rank_mode(const Config &c, const AnyState &state) {
    bool exact_input = std::holds_alternative<ExactState>(state);
    if (c.mode == "exact" || (c.mode == "auto" && exact_input)) {
        if (!exact_input) {
            throw DomainError("exact mode needs an exact state; use --mode numeric");
        }
        return RankMode::exact();
    }
    return RankMode::numeric(c.tolerance);
}

RankMode table_mode(const Config &c) {
    return c.mode == "numeric" ? RankMode::numeric(c.tolerance) : RankMode::exact();
}

FamilyRegistry load_registry(const Config &c) {
    FamilyRegistry registry = FamilyRegistry::with_builtins();
    if (!c.registry_file.empty()) {
        registry.load(read_file(c.registry_file));
    }
    return registry;
}

template <class F>
auto with_state(const AnyState &state, F &&f) {
    return std::visit(std::forward<F>(f), state);
}

int cmd_ranks(const Config &c, const std::string &path) {
    AnyState state = load_state(path);
    RankMode mode = rank_mode(c, state);
    const std::vector<std::string> labels = std::visit([](const auto &s) { return s.labels(); }, state);
    const int n = std::visit([](const auto &s) { return s.num_qubits(); }, state);
    if (!c.bits.empty()) {
        std::vector<int> bits = parse_bits(c.bits, labels);
        int r = with_state(state, [&](const auto &s) { return rank(coefficient_matrix(s, bits), mode); });
        if (machine(c)) {
            std::cout << json{{"bits", c.bits}, {"rank", r}}.dump() << "\n";
        } else {
            std::cout << r << "\n";
        }
        return kOk;
    }
    RankSignature sig = with_state(state, [&](const auto &s) { return rank_signature(s, mode); });
    if (machine(c)) {
        json splits = json::array();
        for (const Bipartition &b : enumerate_bipartitions(n)) {
            splits.push_back({{"split", b.name(labels)}, {"rank", sig.rank(b)}});
        }
        std::cout << json{{"n", n}, {"mode", mode.is_exact() ? "exact" : "numeric"}, {"ranks", splits}}.dump()
                  << "\n";
        return kOk;
    }
    std::cout << fmt::format("{:<{}}  rank\n", "split", std::max<int>(5, n));
    for (const Bipartition &b : enumerate_bipartitions(n)) {
        std::cout << fmt::format("{:<{}}  {}\n", b.name(labels), std::max<int>(5, n), sig.rank(b));
    }
    return kOk;
}

struct Subfamily {
    std::string family;
    const SubfamilyRule *rule;
    Bindings params;
};

// First registered template the state fits, with its rule row.
std::optional<Subfamily> find_subfamily(const FamilyRegistry &registry, const ExactState &state, RankMode mode) {
    for (const std::string &name : registry.names()) {
        const FamilyEntry &entry = registry.at(name);
        if (!entry.family_template || entry.rules.empty()) {
            continue;
        }
        std::optional<TemplateMatch> match = registry.match_template(name, state);
        if (!match) {
            continue;
        }
        SubfamilyMatch m = registry.classify_subfamily(name, match->params, mode);
        return Subfamily{name, m.rule, match->params};
    }
    return std::nullopt;
}

int cmd_classify(const Config &c, const std::string &path) {
    AnyState state = load_state(path);
    RankMode mode = rank_mode(c, state);
    const std::vector<std::string> labels = std::visit([](const auto &s) { return s.labels(); }, state);
    const int n = std::visit([](const auto &s) { return s.num_qubits(); }, state);
    SeparabilityPartition partition =
        with_state(state, [&](const auto &s) { return separability_partition(s, mode); });
    std::string family = partition.is_genuinely_entangled() || n == 1 ? "genuinely entangled" : partition.label(labels);
    std::optional<RankTriple> triple;
    std::optional<Subfamily> sub;
    const FamilyRegistry registry = load_registry(c);
    if (n == 4) {
        triple = with_state(state, [&](const auto &s) { return rank_triple(s, mode); });
        if (const auto *exact = std::get_if<ExactState>(&state)) {
            sub = find_subfamily(registry, *exact, mode);
        }
    }
    if (machine(c)) {
        json out{{"n", n}, {"partition", partition.label(labels)}, {"family", family}};
        if (triple) {
            out["triple"] = triple->str();
        }
        if (sub) {
            out["subfamily"] = {{"family", sub->family},
                                {"triple", sub->rule->triple.str()},
                                {"predicate", sub->rule->text},
                                {"params", render_bindings(sub->params)}};
        }
        std::cout << out.dump() << "\n";
        return kOk;
    }
    std::cout << "partition: " << partition.label(labels) << "\n";
    std::cout << "family: " << family << "\n";
    if (triple) {
        std::cout << fmt::format("triple: ({},{},{})\n", triple->ab, triple->ac, triple->ad);
    }
    if (sub) {
        std::cout << "subfamily: " << sub->family << " " << sub->rule->triple.str()
                  << (sub->rule->biseparable ? "*" : "") << ": " << sub->rule->text << " at "
                  << render_bindings(sub->params) << "\n";
    }
    return kOk;
}

int cmd_invariants(const Config &c, const std::string &path) {
    AnyState state = load_state(path);
    json out;
    std::vector<std::pair<std::string, std::string>> rows = with_state(state, [](const auto &s) {
        auto r = invariant_report(s);
        return std::vector<std::pair<std::string, std::string>>{
            {"dxy", render_scalar(r.d_xy)},     {"f1", render_scalar(r.f1)},
            {"f2", render_scalar(r.f2)},        {"detAB", render_scalar(r.det_ab)},
            {"detAC", render_scalar(r.det_ac)}, {"detAD", render_scalar(r.det_ad)}};
    });
    if (machine(c)) {
        for (const auto &[k, v] : rows) {
            out[k] = v;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto &[k, v] : rows) {
            std::cout << fmt::format("{:<6} {}\n", k + ":", v);
        }
    }
    return kOk;
}

int cmd_verify(const Config &c, const std::string &name) {
    std::vector<std::string> names = name == "all" ? check_names() : std::vector<std::string>{name};
    const std::uint64_t seed = effective_seed(c);
    bool ok = true;
    json out = json::array();
    for (const std::string &check : names) {
        CheckResult r = run_check(check, c.trials, seed);
        ok = ok && r.ok();
        if (machine(c)) {
            out.push_back({{"check", r.name},
                           {"trials", r.trials},
                           {"passed", r.passed},
                           {"seed", r.seed},
                           {"ok", r.ok()},
                           {"counterexample", r.counterexample}});
        } else {
            std::cout << fmt::format("{}: {} ({}/{} trials, seed {})\n", r.name, r.ok() ? "pass" : "FAIL", r.passed,
                                     r.trials, r.seed);
            if (!r.ok()) {
                std::cout << "  counterexample: " << r.counterexample << "\n";
            }
        }
    }
    if (machine(c)) {
        std::cout << out.dump() << "\n";
    }
    if (!ok) {
        throw VerificationFailure{};
    }
    return kOk;
}

void print_row(const TableRow &r) {
    std::cout << fmt::format("{:<22} {:<9} expected {:<28} observed {}", r.label, verdict_name(r.verdict),
                             r.expected, r.observed);
    if (!r.detail.empty()) {
        std::cout << "  (" << r.detail << ")";
    }
    std::cout << "\n";
    if (!r.description.empty()) {
        std::cout << "    " << r.description << "\n";
    }
}

json row_json(const TableRow &r) {
    return {{"label", r.label},       {"description", r.description}, {"expected", r.expected},
            {"observed", r.observed}, {"verdict", verdict_name(r.verdict)}, {"samples", r.samples},
            {"detail", r.detail}};
}

int cmd_table(const Config &c, int id) {
    FamilyRegistry registry = load_registry(c);
    TableOptions options;
    options.samples = c.samples;
    options.scan = c.scan;
    options.seed = effective_seed(c);
    options.mode = table_mode(c);
    TableReport report = reproduce_table(id, registry, options);
    if (machine(c)) {
        json rows = json::array();
        json checks = json::array();
        for (const TableRow &r : report.rows) {
            rows.push_back(row_json(r));
        }
        for (const TableRow &r : report.checks) {
            checks.push_back(row_json(r));
        }
        std::cout << json{{"table", report.id}, {"title", report.title}, {"rows", rows}, {"checks", checks}}.dump()
                  << "\n";
    } else {
        std::cout << "Table " << report.id << ": " << report.title << "\n";
        for (const TableRow &r : report.rows) {
            print_row(r);
        }
        for (const TableRow &r : report.checks) {
            print_row(r);
        }
        std::cout << fmt::format("{} rows, {} checks: {} match, {} mismatch, {} skipped\n", report.rows.size(),
                                 report.checks.size(), report.count(RowVerdict::kMatch),
                                 report.count(RowVerdict::kMismatch), report.count(RowVerdict::kSkipped));
    }
    if (!report.all_match()) {
        throw VerificationFailure{};
    }
    return kOk;
}

int cmd_instantiate(const Config &c, const std::string &family, const std::vector<std::string> &assignments) {
    FamilyRegistry registry = load_registry(c);
    Bindings bindings;
    for (const std::string &a : assignments) {
        auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw DomainError("expected NAME=VALUE, got '" + a + "'");
        }
        ScalarLiteral v = parse_scalar(a.substr(eq + 1), {1, eq + 2});
        if (is_floating(v)) {
            throw DomainError("family parameters must be exact: '" + a + "'");
        }
        bindings[a.substr(0, eq)] = std::get<ExactScalar>(v);
    }
    std::cout << render_state(registry.instantiate(family, bindings));
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Coefficient-matrix ranks and SLOCC classification of multiqubit pure states"};
    app.require_subcommand(1);
    app.fallthrough();
    Config config;
    app.add_option("--mode", config.mode, "Rank mode")->check(CLI::IsMember({"auto", "exact", "numeric"}));
    app.add_option("--tolerance", config.tolerance, "Relative singular-value tolerance (numeric mode)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Random seed (falls back to SLOCC_RANK_SEED)");
    app.add_option("--output", config.output, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--registry", config.registry_file, "Additional family registry file")->check(CLI::ExistingFile);

    std::string path;
    auto *ranks = app.add_subcommand("ranks", "Rank signature of a state file");
    ranks->add_option("state", path, "State file")->required();
    ranks->add_option("--bits", config.bits, "Only the rank of C with these row qubits, e.g. AB");

    auto *classify = app.add_subcommand("classify", "Separability, degenerate family and subfamily");
    classify->add_option("state", path, "State file")->required();

    auto *invariants = app.add_subcommand("invariants", "D_xy, F1, F2 and det C_AB/AC/AD of a four-qubit state");
    invariants->add_option("state", path, "State file")->required();

    std::string check;
    auto *verify = app.add_subcommand("verify", "Run a randomized property check");
    verify->add_option("check", check, "Check name or 'all'")->required();
    verify->add_option("--trials", config.trials, "Number of trials")->check(CLI::PositiveNumber);

    int table_id = 0;
    auto *table = app.add_subcommand("table", "Reproduce a classification table against stored fixtures");
    table->add_option("id", table_id, "Table number")->required()->check(CLI::Range(1, 8));
    table->add_option("--samples", config.samples, "Samples per row")->check(CLI::PositiveNumber);
    table->add_option("--scan", config.scan, "Random tuples per completeness scan")->check(CLI::NonNegativeNumber);

    std::string family;
    std::vector<std::string> assignments;
    auto *instantiate = app.add_subcommand("instantiate", "Write the state file of a registered family");
    instantiate->add_option("family", family, "Family name")->required();
    instantiate->add_option("params", assignments, "NAME=VALUE bindings");

    std::string names = "checks: ";
    for (const std::string &n : check_names()) {
        names += n + " ";
    }
    verify->footer(names);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*ranks) {
            return cmd_ranks(config, path);
        }
        if (*classify) {
            return cmd_classify(config, path);
        }
        if (*invariants) {
            return cmd_invariants(config, path);
        }
        if (*verify) {
            if (check != "all" &&
                std::find(check_names().begin(), check_names().end(), check) == check_names().end()) {
                std::cerr << "error: unknown check '" << check << "'; " << names << "\n";
                return kUsage;
            }
            return cmd_verify(config, check);
        }
        if (*table) {
            return cmd_table(config, table_id);
        }
        if (*instantiate) {
            return cmd_instantiate(config, family, assignments);
        }
    } catch (const VerificationFailure &f) {
        return f.code;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const NumericError &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kNumeric;
    } catch (const ConsistencyError &e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return kVerification;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
