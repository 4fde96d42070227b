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

#include "slocc/family.h"

#include <algorithm>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <set>

#include "fixtures.h"
#include "slocc/errors.h"
#include "slocc/exact_linalg.h"
#include "slocc/scalar_text.h"

namespace slocc {

AffineExpr AffineExpr::parse(std::string_view text, const std::vector<std::string> &params, TextOrigin origin) {
    AffineExpr out;
    for (const AffineTerm &term : parse_affine(text, origin)) {
        if (term.symbol.empty()) {
            out.constant_ += term.coefficient;
            continue;
        }
        if (std::find(params.begin(), params.end(), term.symbol) == params.end()) {
            throw ParseError("unknown parameter '" + term.symbol + "' in '" + std::string(text) + "'", origin.line,
                             origin.column);
        }
        out.coefficients_[term.symbol] += term.coefficient;
    }
    std::erase_if(out.coefficients_, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

ExactScalar AffineExpr::coefficient(const std::string &symbol) const {
    auto it = coefficients_.find(symbol);
    return it == coefficients_.end() ? ExactScalar(0) : it->second;
}

ExactScalar AffineExpr::evaluate(const Bindings &bindings) const {
    ExactScalar v = constant_;
    for (const auto &[symbol, c] : coefficients_) {
        v += c * binding(bindings, symbol);
    }
    return v;
}

AffineExpr AffineExpr::substitute(const Bindings &fixed) const {
    AffineExpr out(constant_);
    for (const auto &[symbol, c] : coefficients_) {
        auto it = fixed.find(symbol);
        if (it == fixed.end()) {
            out.coefficients_[symbol] = c;
        } else {
            out.constant_ += c * it->second;
        }
    }
    return out;
}

std::string AffineExpr::str() const {
    // Every rational part becomes its own term so that parse() reads it back.
    std::string out;
    auto append = [&](const ExactScalar &c, const std::string &symbol) {
        const std::pair<const Rational *, const char *> parts[] = {
            {&c.p(), ""}, {&c.q(), "i"}, {&c.r(), "r2"}, {&c.s(), "i*r2"}};
        for (const auto &[part, unit] : parts) {
            if (part->is_zero()) {
                continue;
            }
            std::vector<std::string> factors;
            Rational magnitude = part->sign() < 0 ? -*part : *part;
            bool bare = *unit == '\0' && symbol.empty();
            if (bare || magnitude != Rational(1)) {
                factors.push_back(magnitude.str());
            }
            if (*unit) {
                factors.push_back(unit);
            }
            if (!symbol.empty()) {
                factors.push_back(symbol);
            }
            std::string term = fmt::format("{}", fmt::join(factors, "*"));
            if (out.empty()) {
                out = part->sign() < 0 ? "-" + term : term;
            } else {
                out += (part->sign() < 0 ? " - " : " + ") + term;
            }
        }
    };
    append(constant_, "");
    for (const auto &[symbol, c] : coefficients_) {
        append(c, symbol);
    }
    return out.empty() ? "0" : out;
}

RankTriple RankTriple::parse(std::string_view text) {
    if (text.size() != 3) {
        throw ParseError("rank triple must be three digits: '" + std::string(text) + "'");
    }
    int v[3];
    for (int k = 0; k < 3; ++k) {
        if (text[k] < '1' || text[k] > '4') {
            throw ParseError("rank triple digits must lie in 1..4: '" + std::string(text) + "'", 1, k + 1);
        }
        v[k] = text[k] - '0';
    }
    return {v[0], v[1], v[2]};
}

std::string RankTriple::str() const {
    return std::to_string(ab) + std::to_string(ac) + std::to_string(ad);
}

template <Scalar S>
RankTriple rank_triple(const PureState<S> &state, RankMode mode) {
    if (state.num_qubits() != 4) {
        throw DomainError("rank triples are defined for four-qubit states");
    }
    auto r = [&](std::vector<int> bits) { return rank(coefficient_matrix(state, Bipartition(4, bits)), mode); };
    return {r({1, 2}), r({1, 3}), r({1, 4})};
}

template RankTriple rank_triple(const ExactState &, RankMode);
template RankTriple rank_triple(const FloatState &, RankMode);

FamilyTemplate::FamilyTemplate(std::string name, std::vector<std::string> params, std::vector<AffineExpr> amplitudes)
    : name_(std::move(name)), params_(std::move(params)), amplitudes_(std::move(amplitudes)) {
    if (name_.empty()) {
        throw DomainError("family name is empty");
    }
    if (amplitudes_.size() != 16) {
        throw DomainError("family '" + name_ + "' needs 16 amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    std::set<std::string> seen;
    for (const std::string &p : params_) {
        if (p.empty() || p == "i" || p == "r2") {
            throw DomainError("invalid parameter name '" + p + "' in family '" + name_ + "'");
        }
        if (!seen.insert(p).second) {
            throw DomainError("duplicate parameter '" + p + "' in family '" + name_ + "'");
        }
    }
    for (const AffineExpr &e : amplitudes_) {
        for (const auto &[symbol, c] : e.coefficients()) {
            if (!seen.count(symbol)) {
                throw DomainError("amplitude uses undeclared parameter '" + symbol + "'");
            }
        }
    }
}

std::vector<int> FamilyTemplate::support() const {
    std::vector<int> out;
    for (int k = 0; k < 16; ++k) {
        if (!amplitudes_[k].constant().is_zero() || !amplitudes_[k].coefficients().empty()) {
            out.push_back(k);
        }
    }
    return out;
}

ExactState FamilyTemplate::instantiate(const Bindings &bindings) const {
    std::vector<ExactScalar> amps;
    amps.reserve(16);
    for (const AffineExpr &e : amplitudes_) {
        amps.push_back(e.evaluate(bindings));
    }
    if (std::all_of(amps.begin(), amps.end(), [](const ExactScalar &x) { return x.is_zero(); })) {
        throw DomainError(name_ + "(" + render_bindings(bindings) + ") is the zero vector");
    }
    return ExactState(4, std::move(amps));
}

namespace {

using nlohmann::json;

std::string string_field(const json &j, const char *key, const std::string &fallback = "") {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_string()) {
        throw ParseError(std::string("field '") + key + "' must be a string");
    }
    return j.at(key).get<std::string>();
}

std::vector<SubfamilyRule> parse_rules(const json &entry, const std::string &family,
                                       const std::vector<std::string> &params,
                                       const std::map<std::string, std::string> &named) {
    std::vector<SubfamilyRule> rules;
    if (!entry.contains("rules")) {
        return rules;
    }
    if (!entry.at("rules").is_array()) {
        throw ParseError("'rules' of family '" + family + "' must be an array");
    }
    for (const json &r : entry.at("rules")) {
        SubfamilyRule rule;
        rule.family = family;
        rule.triple = RankTriple::parse(string_field(r, "triple"));
        if (r.contains("intersect")) {
            Predicate p = Predicate::always();
            std::string text;
            for (const json &ref : r.at("intersect")) {
                std::string name = ref.get<std::string>();
                auto it = named.find(name);
                if (it == named.end()) {
                    throw ParseError("rule of '" + family + "' refers to unknown predicate '" + name + "'");
                }
                p = p & Predicate::parse(it->second);
                text += (text.empty() ? "" : " & ") + name;
            }
            rule.predicate = std::move(p);
            rule.text = text;
        } else {
            rule.text = string_field(r, "predicate");
            if (rule.text.empty()) {
                throw ParseError("rule of '" + family + "' has neither 'predicate' nor 'intersect'");
            }
            rule.predicate = Predicate::parse(rule.text);
        }
        for (const std::string &s : rule.predicate.symbols()) {
            if (std::find(params.begin(), params.end(), s) == params.end()) {
                throw ParseError("rule '" + rule.text + "' of '" + family + "' uses unknown parameter '" + s + "'");
            }
        }
        rule.biseparable = r.value("bisep", false);
        rule.structure = string_field(r, "structure");
        rule.note = string_field(r, "note");
        rules.push_back(std::move(rule));
    }
    return rules;
}

}  // namespace

FamilyRegistry FamilyRegistry::with_builtins() {
    FamilyRegistry registry;
    registry.load(fixtures::builtin_families(), true);
    return registry;
}

FamilyEntry &FamilyRegistry::entry_or_create(const std::string &name) {
    for (FamilyEntry &e : entries_) {
        if (e.name == name) {
            return e;
        }
    }
    entries_.push_back(FamilyEntry{name, {}, std::nullopt, {}, {}, false});
    return entries_.back();
}

void FamilyRegistry::register_family(FamilyTemplate family_template, std::vector<SubfamilyRule> rules) {
    const std::string name = family_template.name();
    bool existed = contains(name);
    FamilyEntry &entry = entry_or_create(name);
    if (entry.family_template) {
        throw DomainError("family '" + name + "' is already registered");
    }
    if (existed && !entry.params.empty() && entry.params != family_template.params() && rules.empty()) {
        throw DomainError("template parameters of '" + name + "' do not match its pending rules");
    }
    for (SubfamilyRule &r : rules) {
        r.family = name;
        for (const std::string &s : r.predicate.symbols()) {
            const auto &p = family_template.params();
            if (std::find(p.begin(), p.end(), s) == p.end()) {
                throw DomainError("rule '" + r.text + "' uses unknown parameter '" + s + "'");
            }
        }
    }
    entry.params = family_template.params();
    entry.family_template = std::move(family_template);
    if (!rules.empty()) {
        entry.rules = std::move(rules);
    }
}

void FamilyRegistry::load(std::string_view json_text, bool builtin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("registry is not valid JSON: ") + e.what(), 0, 0);
    }
    if (!doc.is_array()) {
        throw ParseError("registry must be a JSON array of families");
    }
    try {
        for (const json &item : doc) {
            std::string name = string_field(item, "name");
            if (name.empty()) {
                throw ParseError("registry entry without a name");
            }
            std::vector<std::string> params = item.value("params", std::vector<std::string>{});
            std::map<std::string, std::string> named =
                item.value("predicates", std::map<std::string, std::string>{});
            std::vector<SubfamilyRule> rules = parse_rules(item, name, params, named);
            if (item.contains("amps")) {
                std::vector<AffineExpr> amps;
                for (const json &a : item.at("amps")) {
                    amps.push_back(AffineExpr::parse(a.get<std::string>(), params));
                }
                register_family(FamilyTemplate(name, params, std::move(amps)), std::move(rules));
            } else {
                if (contains(name)) {
                    throw DomainError("family '" + name + "' is already registered");
                }
                FamilyEntry &entry = entry_or_create(name);
                entry.params = params;
                entry.rules = std::move(rules);
            }
            FamilyEntry &entry = entry_or_create(name);
            entry.predicates.insert(named.begin(), named.end());
            entry.builtin = entry.builtin || builtin;
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed registry: ") + e.what());
    }
}

bool FamilyRegistry::contains(std::string_view name) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const FamilyEntry &e) { return e.name == name; });
}

const FamilyEntry &FamilyRegistry::at(std::string_view name) const {
    for (const FamilyEntry &e : entries_) {
        if (e.name == name) {
            return e;
        }
    }
    throw DomainError("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> FamilyRegistry::names() const {
    std::vector<std::string> out;
    for (const FamilyEntry &e : entries_) {
        out.push_back(e.name);
    }
    return out;
}

ExactState FamilyRegistry::instantiate(std::string_view name, const Bindings &bindings) const {
    const FamilyEntry &entry = at(name);
    if (!entry.family_template) {
        throw DomainError("family '" + entry.name + "' has no template");
    }
    return entry.family_template->instantiate(bindings);
}

SubfamilyMatch FamilyRegistry::classify_subfamily(std::string_view name, const Bindings &bindings,
                                                  RankMode mode) const {
    const FamilyEntry &entry = at(name);
    if (entry.rules.empty()) {
        throw DomainError("family '" + entry.name + "' has no rule table");
    }
    std::vector<const SubfamilyRule *> hits;
    for (const SubfamilyRule &r : entry.rules) {
        if (r.predicate.evaluate(bindings)) {
            hits.push_back(&r);
        }
    }
    const std::string where = entry.name + "(" + render_bindings(bindings) + ")";
    if (hits.empty()) {
        throw ConsistencyError("no rule of " + entry.name + " matches " + where);
    }
    if (hits.size() > 1) {
        throw ConsistencyError("rules " + hits[0]->triple.str() + " and " + hits[1]->triple.str() + " both match " +
                               where);
    }
    RankTriple observed = rank_triple(instantiate(name, bindings), mode);
    if (observed != hits[0]->triple) {
        throw ConsistencyError(where + " has triple " + observed.str() + " but rule '" + hits[0]->text +
                               "' predicts " + hits[0]->triple.str());
    }
    return {hits[0], observed};
}

std::optional<TemplateMatch> FamilyRegistry::match_template(std::string_view name, const ExactState &state,
                                                            const Bindings &fixed) const {
    const FamilyEntry &entry = at(name);
    if (!entry.family_template) {
        throw DomainError("family '" + entry.name + "' has no template");
    }
    if (state.num_qubits() != 4) {
        return std::nullopt;
    }
    std::vector<std::string> free;
    for (const std::string &p : entry.params) {
        if (!fixed.count(p)) {
            free.push_back(p);
        }
    }
    std::vector<AffineExpr> amps;
    bool has_constant = false;
    for (const AffineExpr &e : entry.family_template->amplitudes()) {
        amps.push_back(e.substitute(fixed));
        has_constant = has_constant || !amps.back().constant().is_zero();
    }
    // Unknowns: the scale and scale * p_k with a constant column, the p_k
    // themselves (scale 1) without one.
    std::size_t offset = has_constant ? 1 : 0;
    std::size_t cols = offset + free.size();
    if (cols == 0) {
        return std::nullopt;
    }
    Matrix<ExactScalar> a(16, cols);
    for (std::size_t row = 0; row < 16; ++row) {
        if (has_constant) {
            a(row, 0) = amps[row].constant();
        }
        for (std::size_t k = 0; k < free.size(); ++k) {
            a(row, offset + k) = amps[row].coefficient(free[k]);
        }
    }
    auto mu = solve_unique(a, state.amplitudes());
    if (!mu) {
        return std::nullopt;
    }
    TemplateMatch out{fixed, ExactScalar(1)};
    if (has_constant) {
        if ((*mu)[0].is_zero()) {
            return std::nullopt;
        }
        out.scale = (*mu)[0];
    }
    for (std::size_t k = 0; k < free.size(); ++k) {
        out.params[free[k]] = has_constant ? (*mu)[offset + k] / out.scale : (*mu)[offset + k];
    }
    return out;
}

namespace {

std::vector<NamedPermutation> named_list(const char *prefix, std::initializer_list<const char *> cycles) {
    std::vector<NamedPermutation> out;
    int k = 1;
    for (const char *c : cycles) {
        out.push_back({prefix + std::to_string(k++), c, QubitPermutation::parse_cycles(4, c)});
    }
    return out;
}

}  // namespace

const std::vector<NamedPermutation> &kappa_permutations() {
    static const std::vector<NamedPermutation> list =
        named_list("κ", {"I", "(1,3)", "(1,4)", "(1,2)(1,3)", "(1,2)(1,4)", "(1,4)(1,2)(1,3)"});
    return list;
}

const std::vector<NamedPermutation> &pi_permutations() {
    static const std::vector<NamedPermutation> list =
        named_list("π", {"I", "(1,2)", "(1,3)", "(1,4)", "(1,3)(1,2)", "(1,4)(1,2)", "(1,2)(1,3)", "(1,2)(1,4)",
                         "(1,2)(1,3)(1,2)", "(1,2)(1,4)(1,2)", "(1,4)(1,2)(1,3)", "(1,4)(1,2)(1,3)(1,2)"});
    return list;
}

std::vector<QubitPermutation> all_permutations(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 8) {
        throw DomainError("all_permutations supports 1..8 qubits");
    }
    std::vector<int> image(num_qubits);
    for (int k = 0; k < num_qubits; ++k) {
        image[k] = k + 1;
    }
    std::vector<QubitPermutation> out;
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

std::vector<PermutedTriple> permutation_analysis(const ExactState &state, std::span<const QubitPermutation> perms,
                                                 RankMode mode) {
    std::vector<PermutedTriple> out;
    for (const QubitPermutation &p : perms) {
        out.push_back({p, rank_triple(permute_qubits(state, p), mode)});
    }
    return out;
}

PermutationScan permutation_scan(const ExactState &state, RankMode mode) {
    std::vector<QubitPermutation> perms = all_permutations(state.num_qubits());
    PermutationScan scan;
    std::vector<ExactState> permuted;
    for (const QubitPermutation &p : perms) {
        permuted.push_back(permute_qubits(state, p));
        scan.entries.push_back({p, rank_triple(permuted.back(), mode)});
    }
    for (std::size_t k = 0; k < permuted.size(); ++k) {
        bool placed = false;
        for (std::vector<int> &cls : scan.classes) {
            if (proportional(permuted[cls.front()], permuted[k])) {
                cls.push_back(static_cast<int>(k));
                placed = true;
                break;
            }
        }
        if (!placed) {
            scan.classes.push_back({static_cast<int>(k)});
        }
    }
    std::set<RankTriple> triples;
    for (const PermutedTriple &e : scan.entries) {
        triples.insert(e.triple);
    }
    scan.triples.assign(triples.begin(), triples.end());
    return scan;
}

}  // namespace slocc
