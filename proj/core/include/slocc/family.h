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

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/bindings.h"
#include "slocc/coefficient_matrix.h"
#include "slocc/predicate.h"
#include "slocc/pure_state.h"
#include "slocc/scalar_text.h"

namespace slocc {

/// constant + sum_k coefficient_k * symbol_k over ExactScalar.
class AffineExpr {
   public:
    AffineExpr() = default;
    explicit AffineExpr(ExactScalar constant) : constant_(std::move(constant)) {
    }

    /// Accepts the affine grammar of parse_affine(); repeated symbols are
    /// merged and every symbol must appear in `params` (ParseError otherwise).
    static AffineExpr parse(std::string_view text, const std::vector<std::string> &params, TextOrigin origin = {});

    const ExactScalar &constant() const {
        return constant_;
    }
    /// Zero when the symbol does not occur.
    ExactScalar coefficient(const std::string &symbol) const;
    const std::map<std::string, ExactScalar> &coefficients() const {
        return coefficients_;
    }

    ExactScalar evaluate(const Bindings &bindings) const;
    /// Replaces the given symbols by constants.
    AffineExpr substitute(const Bindings &fixed) const;
    std::string str() const;

    friend bool operator==(const AffineExpr &, const AffineExpr &) = default;

   private:
    ExactScalar constant_{0};
    std::map<std::string, ExactScalar> coefficients_;
};

/// (r_AB, r_AC, r_AD).
struct RankTriple {
    int ab = 0;
    int ac = 0;
    int ad = 0;

    /// "434" -> (4, 3, 4). Throws ParseError.
    static RankTriple parse(std::string_view text);
    std::string str() const;

    friend auto operator<=>(const RankTriple &, const RankTriple &) = default;
};

/// Ranks of C_AB, C_AC and C_AD of a four-qubit state.
template <Scalar S>
RankTriple rank_triple(const PureState<S> &state, RankMode mode);

/// A named four-qubit state whose 16 amplitudes are affine in parameters.
class FamilyTemplate {
   public:
    /// Throws DomainError unless there are 16 amplitudes and the parameter
    /// names are distinct, nonempty and not reserved (`i`, `r2`).
    FamilyTemplate(std::string name, std::vector<std::string> params, std::vector<AffineExpr> amplitudes);

    const std::string &name() const {
        return name_;
    }
    const std::vector<std::string> &params() const {
        return params_;
    }
    const std::vector<AffineExpr> &amplitudes() const {
        return amplitudes_;
    }
    /// Basis indices whose amplitude is not identically zero.
    std::vector<int> support() const;

    /// Throws DomainError on a missing binding or an all-zero result.
    ExactState instantiate(const Bindings &bindings) const;

   private:
    std::string name_;
    std::vector<std::string> params_;
    std::vector<AffineExpr> amplitudes_;
};

/// One row of a subfamily table: parameters satisfying `predicate` give
/// states with rank triple `triple`.
struct SubfamilyRule {
    std::string family;
    RankTriple triple;
    Predicate predicate;
    /// Predicate as written in the source data.
    std::string text;
    bool biseparable = false;
    /// Expected separability label for biseparable rows, e.g. "AB–CD".
    std::string structure;
    std::string note;
};

struct FamilyEntry {
    std::string name;
    std::vector<std::string> params;
    std::optional<FamilyTemplate> family_template;
    std::vector<SubfamilyRule> rules;
    /// Named sub-predicates the rules are built from (e.g. per-split rank
    /// conditions).
    std::map<std::string, std::string> predicates;
    bool builtin = false;
};

/// Result of classify_subfamily().
struct SubfamilyMatch {
    const SubfamilyRule *rule;
    RankTriple observed;
};

/// A template fit: state = scale * family(params).
struct TemplateMatch {
    Bindings params;
    ExactScalar scale;
};

/// Families known by name. Append-only.
class FamilyRegistry {
   public:
    FamilyRegistry() = default;

    /// G_abcd, L_abc2, L_ab3, L_ab3' with their tables, plus rule rows of the
    /// remaining families awaiting templates.
    static FamilyRegistry with_builtins();

    /// Adds a template. A name that only carries pending rules adopts them when
    /// `rules` is empty. Throws DomainError on a name collision.
    void register_family(FamilyTemplate family_template, std::vector<SubfamilyRule> rules = {});

    /// Reads a registry file (JSON array of {name, params, amps, rules,
    /// predicates}); entries without `amps` only carry rules. Throws
    /// ParseError or DomainError.
    void load(std::string_view json_text, bool builtin = false);

    bool contains(std::string_view name) const;
    const FamilyEntry &at(std::string_view name) const;
    /// Registration order.
    std::vector<std::string> names() const;

    ExactState instantiate(std::string_view name, const Bindings &bindings) const;

    /// The unique rule whose predicate holds. Throws ConsistencyError when no
    /// rule or several rules match, or when the computed triple differs from
    /// the rule's triple.
    SubfamilyMatch classify_subfamily(std::string_view name, const Bindings &bindings,
                                      RankMode mode = RankMode::exact()) const;

    /// Solves state = scale * template(params) for the free parameters after
    /// substituting `fixed`. Empty when the state has no such form.
    std::optional<TemplateMatch> match_template(std::string_view name, const ExactState &state,
                                                const Bindings &fixed = {}) const;

   private:
    FamilyEntry &entry_or_create(const std::string &name);

    std::vector<FamilyEntry> entries_;
};

/// A permutation with its display name, e.g. ("κ4", (1,2)(1,3)).
struct NamedPermutation {
    std::string name;
    std::string cycles;
    QubitPermutation perm;
};

const std::vector<NamedPermutation> &kappa_permutations();
const std::vector<NamedPermutation> &pi_permutations();
/// All n! permutations, image vectors in lexicographic order.
std::vector<QubitPermutation> all_permutations(int num_qubits);

struct PermutedTriple {
    QubitPermutation perm;
    RankTriple triple;
};

/// Rank triples of permute_qubits(state, p) for each p.
std::vector<PermutedTriple> permutation_analysis(const ExactState &state, std::span<const QubitPermutation> perms,
                                                 RankMode mode = RankMode::exact());

struct PermutationScan {
    /// All 24 permutations in lexicographic order.
    std::vector<PermutedTriple> entries;
    /// Indices into `entries` grouped by permuted states equal up to a global
    /// scale; classes ordered by first index.
    std::vector<std::vector<int>> classes;
    /// Distinct triples across the scan, sorted.
    std::vector<RankTriple> triples;
};

PermutationScan permutation_scan(const ExactState &state, RankMode mode = RankMode::exact());

}  // namespace slocc
