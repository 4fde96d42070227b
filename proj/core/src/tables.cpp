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

#include "slocc/tables.h"

#include <algorithm>
#include <fmt/format.h>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "fixtures.h"
#include "slocc/errors.h"
#include "slocc/verify.h"

namespace slocc {

using nlohmann::json;

std::string verdict_name(RowVerdict verdict) {
    switch (verdict) {
        case RowVerdict::kMatch:
            return "match";
        case RowVerdict::kMismatch:
            return "mismatch";
        case RowVerdict::kSkipped:
            return "skipped";
    }
    return "?";
}

int TableReport::count(RowVerdict verdict) const {
    auto pred = [&](const TableRow &r) { return r.verdict == verdict; };
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), pred) +
                            std::count_if(checks.begin(), checks.end(), pred));
}

ExactState family_representative(const SeparabilityPartition &partition) {
    std::vector<PlacedFactor<ExactScalar>> factors;
    for (const std::vector<int> &block : partition.blocks()) {
        int size = static_cast<int>(block.size());
        std::vector<ExactScalar> amps(std::size_t{1} << size);
        amps.front() = ExactScalar(1);
        if (size > 1) {
            amps.back() = ExactScalar(1);
        }
        factors.push_back({ExactState(size, std::move(amps)), block});
    }
    return tensor_all(std::span<const PlacedFactor<ExactScalar>>(factors));
}

namespace {

std::string join_ints(const std::vector<int> &v, const char *sep = " ") {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k ? sep : "") + std::to_string(v[k]);
    }
    return out;
}

// "2" or ">=2".
bool rank_matches(const std::string &expected, int rank) {
    if (expected.rfind(">=", 0) == 0) {
        return rank >= std::stoi(expected.substr(2));
    }
    return rank == std::stoi(expected);
}

json load_fixture(int id) {
    static constexpr std::string_view (*kFixtures[])() = {fixtures::table1, fixtures::table2, fixtures::table3,
                                                           fixtures::table4, fixtures::table5, fixtures::table6,
                                                           fixtures::table7, fixtures::table8};
    return json::parse(kFixtures[id - 1]());
}

ExactState genuinely_entangled_block(int size, std::mt19937_64 &rng) {
    while (true) {
        ExactState s = random_dense_exact_state(size, rng);
        if (size == 1 || separability_partition(s, RankMode::exact()).is_genuinely_entangled()) {
            return s;
        }
    }
}

// Tables 1 and 2: one representative per degenerate family.
TableReport grid_table(int id, const json &fixture, const TableOptions &options) {
    TableReport report;
    report.id = id;
    report.title = fixture.at("title").get<std::string>();
    const int n = fixture.at("qubits").get<int>();
    const std::vector<std::string> labels = default_labels(n);
    std::vector<std::vector<int>> splits;
    report.columns.push_back("family");
    for (const json &c : fixture.at("columns")) {
        splits.push_back(parse_bits(c.get<std::string>(), labels));
        report.columns.push_back("C_" + c.get<std::string>());
    }
    std::mt19937_64 rng(options.seed);
    std::set<std::vector<int>> degenerate_signatures;
    int degenerate_rows = 0;
    for (const json &row : fixture.at("rows")) {
        TableRow out;
        out.label = row.at("family").get<std::string>();
        std::vector<std::string> expected = row.at("ranks").get<std::vector<std::string>>();
        out.expected = fmt::format("{}", fmt::join(expected, " "));
        SeparabilityPartition partition = parse_family_label(out.label, labels);
        std::vector<ExactState> states{family_representative(partition)};
        if (partition.is_genuinely_entangled()) {
            // Generic entangled states as well as the GHZ representative.
            for (int k = 1; k < options.samples; ++k) {
                states.push_back(genuinely_entangled_block(n, rng));
            }
        }
        bool ok = true;
        for (const ExactState &state : states) {
            std::vector<int> ranks;
            for (const std::vector<int> &split : splits) {
                ranks.push_back(rank(coefficient_matrix(state, split), options.mode));
            }
            bool row_ok = true;
            for (std::size_t k = 0; k < ranks.size(); ++k) {
                row_ok = row_ok && rank_matches(expected[k], ranks[k]);
            }
            SeparabilityPartition found = separability_partition(state, options.mode);
            if (!(found == partition)) {
                row_ok = false;
                out.detail = "separability " + found.label() + " instead of " + partition.label();
            }
            if (out.observed.empty() || !row_ok) {
                out.observed = join_ints(ranks);
            }
            if (!row_ok && ok) {
                ok = false;
                if (out.detail.empty()) {
                    out.detail = "state " + std::to_string(out.samples + 1) + " of the row";
                }
            }
            ++out.samples;
            if (&state == &states.front() && !partition.is_genuinely_entangled()) {
                ++degenerate_rows;
                degenerate_signatures.insert(rank_signature(state, options.mode).values());
            }
        }
        out.verdict = ok ? RowVerdict::kMatch : RowVerdict::kMismatch;
        report.rows.push_back(std::move(out));
    }
    if (id == 2) {
        TableRow distinct;
        distinct.label = "degenerate signatures";
        distinct.description = "full rank signatures of the degenerate families are pairwise distinct";
        distinct.expected = std::to_string(degenerate_rows) + " distinct";
        distinct.observed = std::to_string(degenerate_signatures.size()) + " distinct";
        distinct.samples = degenerate_rows;
        distinct.verdict = static_cast<int>(degenerate_signatures.size()) == degenerate_rows ? RowVerdict::kMatch
                                                                                              : RowVerdict::kMismatch;
        report.checks.push_back(std::move(distinct));
    }
    return report;
}

struct ShapeRule {
    std::vector<std::string> subset_of;
    std::string touches;
    std::vector<int> ranks;
};

std::vector<ShapeRule> shape_rules(const json &list) {
    std::vector<ShapeRule> out;
    for (const json &r : list) {
        ShapeRule rule;
        rule.subset_of = r.value("subset_of", std::vector<std::string>{});
        rule.touches = r.value("touches", std::string());
        rule.ranks = r.at("ranks").get<std::vector<int>>();
        out.push_back(std::move(rule));
    }
    return out;
}

// First rule whose condition holds for the given roles (letters i..m).
const ShapeRule &select_rule(const std::vector<ShapeRule> &rules, const std::string &roles) {
    for (const ShapeRule &rule : rules) {
        if (!rule.subset_of.empty()) {
            bool inside = std::any_of(rule.subset_of.begin(), rule.subset_of.end(), [&](const std::string &group) {
                return std::all_of(roles.begin(), roles.end(),
                                   [&](char c) { return group.find(c) != std::string::npos; });
            });
            if (inside) {
                return rule;
            }
        } else if (!rule.touches.empty()) {
            if (roles.find_first_of(rule.touches) != std::string::npos) {
                return rule;
            }
        } else {
            return rule;
        }
    }
    throw DomainError("shape rule list without a fallback");
}

// Table 3: structural rank rules for five-qubit shapes under random role
// assignments.
TableReport shape_table(const json &fixture, const TableOptions &options) {
    TableReport report;
    report.id = 3;
    report.title = fixture.at("title").get<std::string>();
    report.columns = {"family", "C_alpha", "C_beta,gamma"};
    const int n = fixture.at("qubits").get<int>();
    const std::vector<std::string> roles = {"i", "j", "k", "l", "m"};
    std::vector<std::vector<int>> pairs;
    for (int b = 1; b <= n; ++b) {
        for (int c = b + 1; c <= n; ++c) {
            pairs.push_back({b, c});
        }
    }
    std::mt19937_64 rng(options.seed);
    for (const json &shape : fixture.at("shapes")) {
        TableRow out;
        out.label = shape.at("family").get<std::string>();
        std::vector<ShapeRule> single = shape_rules(shape.at("single"));
        std::vector<ShapeRule> pair = shape_rules(shape.at("pair"));
        auto describe = [](const std::vector<ShapeRule> &rules) {
            std::string s;
            for (const ShapeRule &r : rules) {
                std::string cond = !r.subset_of.empty() ? "within " + fmt::format("{}", fmt::join(r.subset_of, "/"))
                                   : !r.touches.empty() ? "touching " + r.touches
                                                        : "otherwise";
                s += (s.empty() ? "" : "; ") + join_ints(r.ranks, ",") + " " + cond;
            }
            return s;
        };
        out.expected = describe(single) + " | " + describe(pair);
        const SeparabilityPartition role_blocks = parse_family_label(out.label, roles);
        bool ok = true;
        std::set<int> seen_single;
        std::set<int> seen_pair;
        for (int t = 0; t < options.samples && ok; ++t) {
            // Role r sits on qubit position[r].
            std::vector<int> position = {1, 2, 3, 4, 5};
            std::shuffle(position.begin(), position.end(), rng);
            std::string role_of(n, '?');
            for (int r = 0; r < n; ++r) {
                role_of[position[r] - 1] = roles[r][0];
            }
            std::vector<PlacedFactor<ExactScalar>> factors;
            for (const std::vector<int> &block : role_blocks.blocks()) {
                std::vector<int> where;
                for (int r : block) {
                    where.push_back(position[r - 1]);
                }
                factors.push_back({genuinely_entangled_block(static_cast<int>(block.size()), rng), where});
            }
            ExactState state = tensor_all(std::span<const PlacedFactor<ExactScalar>>(factors));
            for (int q = 1; q <= n && ok; ++q) {
                int r = rank(coefficient_matrix(state, std::vector<int>{q}), options.mode);
                seen_single.insert(r);
                const ShapeRule &rule = select_rule(single, std::string(1, role_of[q - 1]));
                if (std::find(rule.ranks.begin(), rule.ranks.end(), r) == rule.ranks.end()) {
                    ok = false;
                    out.detail = fmt::format("sample {}: rank C_{} = {}", t + 1, default_labels(n)[q - 1], r);
                }
            }
            for (const std::vector<int> &p : pairs) {
                if (!ok) {
                    break;
                }
                int r = rank(coefficient_matrix(state, p), options.mode);
                seen_pair.insert(r);
                std::string pr = {role_of[p[0] - 1], role_of[p[1] - 1]};
                const ShapeRule &rule = select_rule(pair, pr);
                if (std::find(rule.ranks.begin(), rule.ranks.end(), r) == rule.ranks.end()) {
                    ok = false;
                    out.detail = fmt::format("sample {}: rank C_{}{} = {}", t + 1, default_labels(n)[p[0] - 1],
                                             default_labels(n)[p[1] - 1], r);
                }
            }
            ++out.samples;
        }
        out.observed = "C_alpha in {" + join_ints({seen_single.begin(), seen_single.end()}, ",") +
                       "}, C_beta,gamma in {" + join_ints({seen_pair.begin(), seen_pair.end()}, ",") + "}";
        out.verdict = ok ? RowVerdict::kMatch : RowVerdict::kMismatch;
        report.rows.push_back(std::move(out));
    }
    return report;
}

// Table 4: single-split ranks of G_abcd on each named predicate.
TableReport split_table(const json &fixture, const FamilyRegistry &registry, const TableOptions &options) {
    TableReport report;
    report.id = 4;
    report.title = fixture.at("title").get<std::string>();
    report.columns = {"subfamily", "description", "rank"};
    const std::string family = fixture.at("family").get<std::string>();
    const FamilyEntry &entry = registry.at(family);
    int index = 0;
    for (const json &row : fixture.at("rows")) {
        TableRow out;
        out.label = row.at("label").get<std::string>();
        const std::string name = row.at("predicate").get<std::string>();
        const std::string split = row.at("split").get<std::string>();
        const int expected = row.at("rank").get<int>();
        out.expected = "rank C_" + split + " = " + std::to_string(expected);
        auto it = entry.predicates.find(name);
        if (it == entry.predicates.end() || !entry.family_template) {
            out.verdict = RowVerdict::kMismatch;
            out.detail = "registry has no predicate " + name + " with a template";
            report.rows.push_back(std::move(out));
            continue;
        }
        out.description = it->second;
        const std::vector<int> bits = parse_bits(split, default_labels(4));
        std::set<int> seen;
        bool ok = true;
        for (const Bindings &b :
             sample_predicate(Predicate::parse(it->second), entry.params, options.samples, options.seed + index)) {
            int r = rank(coefficient_matrix(entry.family_template->instantiate(b), bits), options.mode);
            seen.insert(r);
            if (r != expected && ok) {
                ok = false;
                out.detail = "(" + render_bindings(b) + ") gives rank " + std::to_string(r);
            }
            ++out.samples;
        }
        out.observed = "rank C_" + split + " in {" + join_ints({seen.begin(), seen.end()}, ",") + "}";
        out.verdict = ok ? RowVerdict::kMatch : RowVerdict::kMismatch;
        report.rows.push_back(std::move(out));
        ++index;
    }
    return report;
}

// Random parameter tuple with frequent coincidences: small integers, signed
// multiples (1 or 3) of earlier parameters, and general rationals.
Bindings scan_tuple(const std::vector<std::string> &params, std::mt19937_64 &rng) {
    Bindings out;
    std::vector<Rational> drawn;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const std::string &p : params) {
        double x = u(rng);
        Rational v;
        if (x < 0.35) {
            v = Rational(std::uniform_int_distribution<long>(-2, 2)(rng));
        } else if (x < 0.7 && !drawn.empty()) {
            const Rational &base = drawn[std::uniform_int_distribution<std::size_t>(0, drawn.size() - 1)(rng)];
            static constexpr long kFactors[] = {1, -1, 3, -3};
            v = base * Rational(kFactors[std::uniform_int_distribution<int>(0, 3)(rng)]);
        } else {
            v = Rational(std::uniform_int_distribution<long>(-9, 9)(rng), std::uniform_int_distribution<long>(1, 4)(rng));
        }
        drawn.push_back(v);
        out[p] = ExactScalar(v);
    }
    return out;
}

// Tables 5-8: rule rows of the registry against the expected triples.
TableReport subfamily_table(int id, const json &fixture, const FamilyRegistry &registry,
                            const TableOptions &options) {
    TableReport report;
    report.id = id;
    report.title = fixture.at("title").get<std::string>();
    report.columns = {"family", "r_AB r_AC r_AD", "description"};
    std::map<std::string, std::set<RankTriple>> listed;
    std::map<std::string, std::set<RankTriple>> empty_rows;
    std::vector<std::string> order;
    int index = 0;
    for (const json &row : fixture.at("rows")) {
        TableRow out;
        const std::string family = row.at("family").get<std::string>();
        const RankTriple triple = RankTriple::parse(row.at("triple").get<std::string>());
        const bool bisep = row.value("bisep", false);
        const bool empty = row.value("empty", false);
        const std::string structure = row.value("structure", std::string());
        out.label = family + " " + triple.str() + (bisep ? "*" : "");
        out.expected = empty ? "empty" : "triple " + triple.str() + (bisep ? ", " + structure : "");
        if (std::find(order.begin(), order.end(), family) == order.end()) {
            order.push_back(family);
        }
        (empty ? empty_rows : listed)[family].insert(triple);
        const std::uint64_t row_seed = options.seed + static_cast<std::uint64_t>(index++);

        if (!registry.contains(family)) {
            out.verdict = RowVerdict::kMismatch;
            out.detail = "family not registered";
            report.rows.push_back(std::move(out));
            continue;
        }
        const FamilyEntry &entry = registry.at(family);
        auto rule_it = std::find_if(entry.rules.begin(), entry.rules.end(),
                                    [&](const SubfamilyRule &r) { return r.triple == triple; });
        if (rule_it == entry.rules.end()) {
            out.verdict = RowVerdict::kMismatch;
            out.detail = "no rule for this triple";
            report.rows.push_back(std::move(out));
            continue;
        }
        const SubfamilyRule &rule = *rule_it;
        out.description = rule.text;
        if (!entry.family_template) {
            out.verdict = RowVerdict::kSkipped;
            out.observed = "skipped: no template";
            report.rows.push_back(std::move(out));
            continue;
        }
        if (empty) {
            bool ok = rule.predicate.is_unsatisfiable_by_construction();
            out.observed = ok ? "empty" : "rule is satisfiable";
            out.verdict = ok ? RowVerdict::kMatch : RowVerdict::kMismatch;
            report.rows.push_back(std::move(out));
            continue;
        }
        if (rule.biseparable != bisep || rule.structure != structure) {
            out.verdict = RowVerdict::kMismatch;
            out.detail = "rule separability data disagrees with the table";
            report.rows.push_back(std::move(out));
            continue;
        }
        std::vector<Bindings> samples;
        try {
            samples = sample_predicate(rule.predicate, entry.params, options.samples, row_seed);
        } catch (const DomainError &e) {
            out.verdict = RowVerdict::kMismatch;
            out.detail = e.what();
            report.rows.push_back(std::move(out));
            continue;
        }
        bool ok = true;
        std::set<RankTriple> seen;
        const std::vector<std::string> labels = default_labels(4);
        for (const Bindings &b : samples) {
            ++out.samples;
            try {
                SubfamilyMatch match = registry.classify_subfamily(family, b, options.mode);
                seen.insert(match.observed);
                if (match.rule != &rule) {
                    ok = false;
                    out.detail = "(" + render_bindings(b) + ") matched rule " + match.rule->triple.str();
                    break;
                }
                ExactState state = registry.instantiate(family, b);
                SeparabilityPartition partition = separability_partition(state, options.mode);
                bool structure_ok = bisep ? partition == parse_family_label(structure, labels)
                                          : partition.is_genuinely_entangled();
                if (!structure_ok) {
                    ok = false;
                    out.detail = "(" + render_bindings(b) + ") has structure " + partition.label();
                    break;
                }
            } catch (const ConsistencyError &e) {
                ok = false;
                out.detail = e.what();
                break;
            } catch (const DomainError &e) {
                ok = false;
                out.detail = e.what();
                break;
            }
        }
        std::vector<std::string> seen_text;
        for (const RankTriple &t : seen) {
            seen_text.push_back(t.str());
        }
        out.observed = "triple " + fmt::format("{}", fmt::join(seen_text, ",")) +
                       (bisep && ok ? ", " + structure : "");
        out.verdict = ok ? RowVerdict::kMatch : RowVerdict::kMismatch;
        report.rows.push_back(std::move(out));
    }

    // Completeness: random tuples only ever land in listed triples, and the
    // rule table agrees with the computed triple.
    std::mt19937_64 rng(options.seed ^ 0x5eed5ca9ULL);
    for (const std::string &family : order) {
        if (!registry.contains(family) || !registry.at(family).family_template || options.scan <= 0) {
            continue;
        }
        const FamilyEntry &entry = registry.at(family);
        TableRow scan;
        scan.label = family + " scan";
        std::vector<std::string> allowed;
        for (const RankTriple &t : listed[family]) {
            allowed.push_back(t.str());
        }
        scan.description = "random parameter tuples";
        scan.expected = "triples in {" + fmt::format("{}", fmt::join(allowed, ",")) + "}";
        std::set<RankTriple> seen;
        bool ok = true;
        // All-zero tuples are redrawn; the cap only guards degenerate templates.
        for (long drawn = 0; scan.samples < options.scan && ok && drawn < 4L * options.scan; ++drawn) {
            Bindings b = scan_tuple(entry.params, rng);
            std::optional<ExactState> state;
            try {
                state = registry.instantiate(family, b);
            } catch (const DomainError &) {
                continue;  // all-zero tuple
            }
            ++scan.samples;
            RankTriple observed = rank_triple(*state, options.mode);
            seen.insert(observed);
            if (!listed[family].count(observed)) {
                ok = false;
                scan.detail = "(" + render_bindings(b) + ") gives unlisted triple " + observed.str();
                break;
            }
            try {
                registry.classify_subfamily(family, b, options.mode);
            } catch (const ConsistencyError &e) {
                ok = false;
                scan.detail = e.what();
            }
        }
        std::vector<std::string> seen_text;
        for (const RankTriple &t : seen) {
            seen_text.push_back(t.str());
        }
        scan.observed = "{" + fmt::format("{}", fmt::join(seen_text, ",")) + "}";
        scan.verdict = ok ? RowVerdict::kMatch : RowVerdict::kMismatch;
        report.checks.push_back(std::move(scan));
    }
    return report;
}

}  // namespace

TableReport reproduce_table(int id, const FamilyRegistry &registry, const TableOptions &options) {
    if (id < 1 || id > 8) {
        throw DomainError("table id must lie in 1..8, got " + std::to_string(id));
    }
    if (options.samples < 1 || options.scan < 0) {
        throw DomainError("table samples must be positive");
    }
    const json fixture = load_fixture(id);
    switch (id) {
        case 1:
        case 2:
            return grid_table(id, fixture, options);
        case 3:
            return shape_table(fixture, options);
        case 4:
            return split_table(fixture, registry, options);
        default:
            return subfamily_table(id, fixture, registry, options);
    }
}

}  // namespace slocc
