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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/bindings.h"
#include "slocc/rational.h"

namespace slocc {

/// Sign attached to a predicate term. kEither is the "±" of the tables.
enum class TermSign { kPlus, kMinus, kEither };

/// `sign * coefficient * s_1 * ... * s_k`; k = 0 is a constant.
struct PredicateTerm {
    TermSign sign = TermSign::kPlus;
    Rational coefficient{1};
    std::vector<std::string> symbols;

    bool is_zero() const {
        return coefficient.is_zero();
    }
    std::string str() const;
};

enum class Relation { kEqual, kNotEqual };

/// `lhs = rhs` or `lhs != rhs`. With "±" signs, equality holds when some sign
/// choice makes both sides equal and inequality when no choice does.
struct PredicateAtom {
    PredicateTerm lhs;
    Relation relation = Relation::kEqual;
    PredicateTerm rhs;

    bool evaluate(const Bindings &bindings) const;
    std::string str() const;
};

/// Disjunctive normal form over atoms. An empty disjunction is `false`; a
/// disjunct without atoms is `true`.
class Predicate {
   public:
    using Conjunction = std::vector<PredicateAtom>;

    Predicate() = default;
    explicit Predicate(std::vector<Conjunction> disjuncts) : disjuncts_(std::move(disjuncts)) {
    }

    static Predicate always() {
        return Predicate({Conjunction{}});
    }
    static Predicate never() {
        return Predicate();
    }

    /// Grammar:
    ///   predicate := conj ('|' conj)* | 'true' | 'false'
    ///   conj      := chain ('&' chain)*
    ///   chain     := term (rel term)+          a = b = 0 means a = b & b = 0
    ///   rel       := '=' | '!=' | '≠'
    ///   term      := sign? (INT '*'? SYMBOL ('*' SYMBOL)* | INT | SYMBOL ('*' SYMBOL)*)
    ///   sign      := '+' | '-' | '+-' | '±'
    /// Throws ParseError.
    static Predicate parse(std::string_view text);

    const std::vector<Conjunction> &disjuncts() const {
        return disjuncts_;
    }
    bool is_unsatisfiable_by_construction() const {
        return disjuncts_.empty();
    }

    /// Throws DomainError when a symbol has no binding.
    bool evaluate(const Bindings &bindings) const;
    /// Every symbol mentioned, sorted and unique.
    std::vector<std::string> symbols() const;

    /// (A1 | A2) & (B1 | B2) expanded into DNF.
    friend Predicate operator&(const Predicate &a, const Predicate &b);
    friend Predicate operator|(const Predicate &a, const Predicate &b);

    std::string str() const;

   private:
    std::vector<Conjunction> disjuncts_;
};

/// Draws `count` rational bindings of `params` satisfying `predicate`.
///
/// Disjuncts are visited round-robin. Within a disjunct linear equalities
/// (x = k y, x = 0, x*y = 0) are solved first and the free values drawn from a
/// small rational grid; the remaining atoms are checked by rejection. Throws
/// DomainError when 10000 consecutive attempts fail.
std::vector<Bindings> sample_predicate(const Predicate &predicate, const std::vector<std::string> &params,
                                       int count, std::uint64_t seed);

}  // namespace slocc
