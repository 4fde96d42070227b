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

#include "slocc/predicate.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "slocc/errors.h"

namespace slocc {

namespace {

enum class TokenKind { kSymbol, kInteger, kStar, kEqual, kNotEqual, kAnd, kOr, kPlus, kMinus, kEither, kEnd };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t k = 0;
    auto starts = [&](std::string_view s) { return text.substr(k, s.size()) == s; };
    while (k < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[k]);
        if (std::isspace(c)) {
            ++k;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t start = k;
            while (k < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_' || text[k] == '\'')) {
                ++k;
            }
            out.push_back({TokenKind::kSymbol, std::string(text.substr(start, k - start)), start});
        } else if (std::isdigit(c)) {
            std::size_t start = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                ++k;
            }
            out.push_back({TokenKind::kInteger, std::string(text.substr(start, k - start)), start});
        } else if (starts("!=")) {
            out.push_back({TokenKind::kNotEqual, "!=", k});
            k += 2;
        } else if (starts("≠")) {
            out.push_back({TokenKind::kNotEqual, "!=", k});
            k += std::string_view("≠").size();
        } else if (starts("+-")) {
            out.push_back({TokenKind::kEither, "+-", k});
            k += 2;
        } else if (starts("±")) {
            out.push_back({TokenKind::kEither, "+-", k});
            k += std::string_view("±").size();
        } else if (starts("∅")) {
            out.push_back({TokenKind::kSymbol, "false", k});
            k += std::string_view("∅").size();
        } else {
            TokenKind kind;
            switch (c) {
                case '*':
                    kind = TokenKind::kStar;
                    break;
                case '=':
                    kind = TokenKind::kEqual;
                    break;
                case '&':
                    kind = TokenKind::kAnd;
                    break;
                case '|':
                    kind = TokenKind::kOr;
                    break;
                case '+':
                    kind = TokenKind::kPlus;
                    break;
                case '-':
                    kind = TokenKind::kMinus;
                    break;
                default:
                    throw ParseError("unexpected character in predicate '" + std::string(text) + "'", 1, k + 1);
            }
            out.push_back({kind, std::string(1, static_cast<char>(c)), k});
            ++k;
        }
    }
    out.push_back({TokenKind::kEnd, "", text.size()});
    return out;
}

class PredicateParser {
   public:
    explicit PredicateParser(std::string_view text) : text_(text), tokens_(tokenize(text)) {
    }

    Predicate parse() {
        if (tokens_.size() == 2 && tokens_[0].kind == TokenKind::kSymbol) {
            if (tokens_[0].text == "true") {
                return Predicate::always();
            }
            if (tokens_[0].text == "false") {
                return Predicate::never();
            }
        }
        std::vector<Predicate::Conjunction> disjuncts;
        while (true) {
            disjuncts.push_back(parse_conjunction());
            if (peek().kind == TokenKind::kOr) {
                ++pos_;
                continue;
            }
            if (peek().kind != TokenKind::kEnd) {
                fail("expected '&', '|' or end of predicate");
            }
            return Predicate(std::move(disjuncts));
        }
    }

   private:
    Predicate::Conjunction parse_conjunction() {
        Predicate::Conjunction atoms;
        while (true) {
            PredicateTerm lhs = parse_term();
            bool any = false;
            while (peek().kind == TokenKind::kEqual || peek().kind == TokenKind::kNotEqual) {
                Relation rel = peek().kind == TokenKind::kEqual ? Relation::kEqual : Relation::kNotEqual;
                ++pos_;
                PredicateTerm rhs = parse_term();
                atoms.push_back({lhs, rel, rhs});
                lhs = std::move(rhs);
                any = true;
            }
            if (!any) {
                fail("expected '=' or '!='");
            }
            if (peek().kind == TokenKind::kAnd) {
                ++pos_;
                continue;
            }
            return atoms;
        }
    }

    PredicateTerm parse_term() {
        PredicateTerm term;
        switch (peek().kind) {
            case TokenKind::kPlus:
                ++pos_;
                break;
            case TokenKind::kMinus:
                term.sign = TermSign::kMinus;
                ++pos_;
                break;
            case TokenKind::kEither:
                term.sign = TermSign::kEither;
                ++pos_;
                break;
            default:
                break;
        }
        bool have_number = false;
        if (peek().kind == TokenKind::kInteger) {
            term.coefficient = Rational::parse(peek().text);
            ++pos_;
            have_number = true;
            if (peek().kind == TokenKind::kStar) {
                ++pos_;
                if (peek().kind != TokenKind::kSymbol) {
                    fail("expected a parameter after '*'");
                }
            }
        }
        while (peek().kind == TokenKind::kSymbol) {
            if (peek().text == "true" || peek().text == "false") {
                fail("'" + peek().text + "' must stand alone");
            }
            term.symbols.push_back(peek().text);
            ++pos_;
            if (peek().kind == TokenKind::kStar) {
                ++pos_;
                if (peek().kind != TokenKind::kSymbol) {
                    fail("expected a parameter after '*'");
                }
            }
        }
        if (!have_number && term.symbols.empty()) {
            fail("expected a number or parameter");
        }
        return term;
    }

    const Token &peek() const {
        return tokens_[pos_];
    }
    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(message + " in predicate '" + std::string(text_) + "'", 1, peek().offset + 1);
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

ExactScalar magnitude(const PredicateTerm &t, const Bindings &bindings) {
    ExactScalar v(t.coefficient);
    for (const std::string &s : t.symbols) {
        v *= binding(bindings, s);
    }
    return v;
}

std::vector<int> signs_of(TermSign s) {
    switch (s) {
        case TermSign::kPlus:
            return {1};
        case TermSign::kMinus:
            return {-1};
        case TermSign::kEither:
            return {1, -1};
    }
    return {1};
}

}  // namespace

std::string PredicateTerm::str() const {
    std::string out;
    if (sign == TermSign::kMinus) {
        out += "-";
    } else if (sign == TermSign::kEither) {
        out += "+-";
    }
    bool show_number = symbols.empty() || coefficient != Rational(1);
    if (show_number) {
        out += coefficient.str();
    }
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        if (k || show_number) {
            out += "*";
        }
        out += symbols[k];
    }
    return out;
}

bool PredicateAtom::evaluate(const Bindings &bindings) const {
    ExactScalar l = magnitude(lhs, bindings);
    ExactScalar r = magnitude(rhs, bindings);
    bool some_equal = false;
    for (int sl : signs_of(lhs.sign)) {
        for (int sr : signs_of(rhs.sign)) {
            ExactScalar a = sl > 0 ? l : -l;
            ExactScalar b = sr > 0 ? r : -r;
            some_equal = some_equal || a == b;
        }
    }
    return relation == Relation::kEqual ? some_equal : !some_equal;
}

std::string PredicateAtom::str() const {
    return lhs.str() + (relation == Relation::kEqual ? " = " : " != ") + rhs.str();
}

Predicate Predicate::parse(std::string_view text) {
    return PredicateParser(text).parse();
}

bool Predicate::evaluate(const Bindings &bindings) const {
    for (const Conjunction &c : disjuncts_) {
        if (std::all_of(c.begin(), c.end(), [&](const PredicateAtom &a) { return a.evaluate(bindings); })) {
            return true;
        }
    }
    return false;
}

std::vector<std::string> Predicate::symbols() const {
    std::set<std::string> out;
    for (const Conjunction &c : disjuncts_) {
        for (const PredicateAtom &a : c) {
            out.insert(a.lhs.symbols.begin(), a.lhs.symbols.end());
            out.insert(a.rhs.symbols.begin(), a.rhs.symbols.end());
        }
    }
    return {out.begin(), out.end()};
}

Predicate operator&(const Predicate &a, const Predicate &b) {
    std::vector<Predicate::Conjunction> out;
    for (const auto &x : a.disjuncts_) {
        for (const auto &y : b.disjuncts_) {
            Predicate::Conjunction c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
        }
    }
    return Predicate(std::move(out));
}

Predicate operator|(const Predicate &a, const Predicate &b) {
    std::vector<Predicate::Conjunction> out = a.disjuncts_;
    out.insert(out.end(), b.disjuncts_.begin(), b.disjuncts_.end());
    return Predicate(std::move(out));
}

std::string Predicate::str() const {
    if (disjuncts_.empty()) {
        return "false";
    }
    std::string out;
    for (std::size_t d = 0; d < disjuncts_.size(); ++d) {
        if (d) {
            out += " | ";
        }
        if (disjuncts_[d].empty()) {
            out += "true";
        }
        for (std::size_t k = 0; k < disjuncts_[d].size(); ++k) {
            if (k) {
                out += " & ";
            }
            out += disjuncts_[d][k].str();
        }
    }
    return out;
}

namespace {

constexpr int kMaxAttempts = 10000;
const std::string kOne = "#one";

// Union-find over parameters with x = ratio * parent.
class RatioForest {
   public:
    void add(const std::string &x) {
        if (!parent_.count(x)) {
            parent_[x] = x;
            ratio_[x] = Rational(1);
            zero_[x] = false;
        }
    }

    std::pair<std::string, Rational> find(const std::string &x) {
        if (parent_[x] == x) {
            return {x, Rational(1)};
        }
        auto [root, r] = find(parent_[x]);
        ratio_[x] = ratio_[x] * r;
        parent_[x] = root;
        return {root, ratio_[x]};
    }

    // x = k * y with k != 0.
    void relate(const std::string &x, const Rational &k, const std::string &y) {
        auto [rx, ax] = find(x);
        auto [ry, ay] = find(y);
        if (rx == ry) {
            if (ax != k * ay) {
                zero_[rx] = true;
            }
            return;
        }
        // rx = (k ay / ax) ry
        parent_[rx] = ry;
        ratio_[rx] = k * ay / ax;
        zero_[ry] = zero_[ry] || zero_[rx];
    }

    void set_zero(const std::string &x) {
        zero_[find(x).first] = true;
    }
    bool is_zero_root(const std::string &root) const {
        return zero_.at(root);
    }

   private:
    std::map<std::string, std::string> parent_;
    std::map<std::string, Rational> ratio_;
    std::map<std::string, bool> zero_;
};

class Sampler {
   public:
    Sampler(const std::vector<std::string> &params, std::uint64_t seed) : params_(params), rng_(seed) {
    }

    Rational grid_value() {
        static constexpr long kDenominators[] = {1, 1, 1, 2, 3};
        long num = std::uniform_int_distribution<long>(-6, 6)(rng_);
        long den = kDenominators[std::uniform_int_distribution<int>(0, 4)(rng_)];
        return Rational(num, den);
    }

    int sign() {
        return std::uniform_int_distribution<int>(0, 1)(rng_) ? 1 : -1;
    }

    std::optional<Bindings> attempt(const Predicate::Conjunction &atoms) {
        RatioForest forest;
        forest.add(kOne);
        for (const std::string &p : params_) {
            forest.add(p);
        }
        for (const PredicateAtom &atom : atoms) {
            if (atom.relation != Relation::kEqual) {
                continue;
            }
            solve(forest, atom);
        }
        std::map<std::string, Rational> root_value;
        auto [one_root, one_ratio] = forest.find(kOne);
        if (forest.is_zero_root(one_root)) {
            return std::nullopt;
        }
        root_value[one_root] = Rational(1) / one_ratio;
        Bindings out;
        for (const std::string &p : params_) {
            auto [root, r] = forest.find(p);
            if (!root_value.count(root)) {
                root_value[root] = forest.is_zero_root(root) ? Rational(0) : grid_value();
            }
            out[p] = ExactScalar(r * root_value[root]);
        }
        if (std::all_of(atoms.begin(), atoms.end(), [&](const PredicateAtom &a) { return a.evaluate(out); })) {
            return out;
        }
        return std::nullopt;
    }

   private:
    static const PredicateTerm *single(const PredicateTerm &t) {
        return t.symbols.size() == 1 && !t.is_zero() ? &t : nullptr;
    }

    int pick_sign(TermSign s) {
        switch (s) {
            case TermSign::kPlus:
                return 1;
            case TermSign::kMinus:
                return -1;
            case TermSign::kEither:
                return sign();
        }
        return 1;
    }

    void solve(RatioForest &forest, const PredicateAtom &atom) {
        const PredicateTerm &l = atom.lhs;
        const PredicateTerm &r = atom.rhs;
        bool l_const = l.symbols.empty() || l.is_zero();
        bool r_const = r.symbols.empty() || r.is_zero();
        if (l_const && r_const) {
            return;
        }
        const PredicateTerm &var = l_const ? r : l;
        const PredicateTerm &other = l_const ? l : r;
        if (other.is_zero()) {
            // product = 0: one factor vanishes.
            std::size_t k = std::uniform_int_distribution<std::size_t>(0, var.symbols.size() - 1)(rng_);
            forest.set_zero(var.symbols[k]);
            return;
        }
        if (!l_const && !r_const) {
            const PredicateTerm *x = single(l);
            const PredicateTerm *y = single(r);
            if (x && y) {
                // sl cl x = sr cr y
                Rational k = Rational(pick_sign(y->sign) * pick_sign(x->sign)) * y->coefficient / x->coefficient;
                forest.relate(x->symbols[0], k, y->symbols[0]);
            }
            return;
        }
        if (const PredicateTerm *x = single(var)) {
            // s c x = s' k  (nonzero constant)
            Rational k = Rational(pick_sign(other.sign) * pick_sign(x->sign)) * other.coefficient / x->coefficient;
            forest.relate(x->symbols[0], k, kOne);
        }
    }

    const std::vector<std::string> &params_;
    std::mt19937_64 rng_;
};

}  // namespace

std::vector<Bindings> sample_predicate(const Predicate &predicate, const std::vector<std::string> &params, int count,
                                       std::uint64_t seed) {
    for (const std::string &s : predicate.symbols()) {
        if (std::find(params.begin(), params.end(), s) == params.end()) {
            throw DomainError("predicate mentions unknown parameter '" + s + "'");
        }
    }
    const auto &disjuncts = predicate.disjuncts();
    if (disjuncts.empty()) {
        throw DomainError("predicate is unsatisfiable: " + predicate.str());
    }
    Sampler sampler(params, seed);
    std::vector<bool> dead(disjuncts.size(), false);
    std::vector<Bindings> out;
    std::size_t next = 0;
    while (static_cast<int>(out.size()) < count) {
        if (std::all_of(dead.begin(), dead.end(), [](bool d) { return d; })) {
            throw DomainError("no satisfying parameters found within the sampling grid for: " + predicate.str());
        }
        std::size_t d = next++ % disjuncts.size();
        if (dead[d]) {
            continue;
        }
        bool found = false;
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            if (auto b = sampler.attempt(disjuncts[d])) {
                out.push_back(std::move(*b));
                found = true;
                break;
            }
        }
        if (!found) {
            dead[d] = true;
        }
    }
    return out;
}

}  // namespace slocc
