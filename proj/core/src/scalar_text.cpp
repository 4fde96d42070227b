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

#include "slocc/scalar_text.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>

#include "slocc/errors.h"

namespace slocc {

namespace {

// One additive term after parsing: a product of factors.
struct RawTerm {
    bool floating = false;
    ExactScalar exact{1};
    Complex value{1.0, 0.0};
    std::string symbol;
};

class TermLexer {
   public:
    TermLexer(std::string_view text, TextOrigin origin, bool allow_symbols)
        : text_(text), origin_(origin), allow_symbols_(allow_symbols) {
    }

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_space();
        if (at_end()) {
            fail("empty scalar");
        }
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            first = false;
            RawTerm term = parse_product();
            if (negative) {
                term.exact = -term.exact;
                term.value = -term.value;
            }
            terms.push_back(std::move(term));
        }
        return terms;
    }

   private:
    RawTerm parse_product() {
        RawTerm term;
        bool seen_number = false;
        while (true) {
            skip_space();
            if (at_end()) {
                fail("expected a number, 'i' or 'r2'");
            }
            std::size_t start = pos_;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                if (seen_number) {
                    fail("more than one number in a term");
                }
                seen_number = true;
                parse_number(term);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word = read_word();
                if (word == "i") {
                    term.exact *= ExactScalar::imaginary_unit();
                    term.value *= Complex(0.0, 1.0);
                } else if (word == "r2") {
                    term.exact *= ExactScalar::sqrt2();
                    term.value *= std::numbers::sqrt2;
                } else if (allow_symbols_) {
                    if (!term.symbol.empty()) {
                        fail_at(start, "more than one parameter in a term");
                    }
                    term.symbol = word;
                } else {
                    fail_at(start, "unknown unit '" + word + "'");
                }
            } else {
                fail("unexpected character '" + std::string(1, c) + "'");
            }
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return term;
        }
    }

    void parse_number(RawTerm &term) {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        bool floating = false;
        if (!at_end() && peek() == '.') {
            floating = true;
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                ++pos_;
            }
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save;
            } else {
                floating = true;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    ++pos_;
                }
            }
        }
        std::string_view digits = text_.substr(start, pos_ - start);
        if (floating) {
            std::string copy(digits);
            char *end = nullptr;
            double v = std::strtod(copy.c_str(), &end);
            if (end != copy.c_str() + copy.size() || !std::isfinite(v)) {
                fail_at(start, "malformed number '" + copy + "'");
            }
            term.floating = true;
            term.value *= v;
            return;
        }
        Rational value;
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::size_t den_start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            if (den_start == pos_) {
                fail("expected a denominator after '/'");
            }
            std::string_view den = text_.substr(den_start, pos_ - den_start);
            if (BigInt(std::string(den), 10) == 0) {
                fail_at(den_start, "zero denominator");
            }
            value = Rational::parse(std::string(digits) + "/" + std::string(den));
        } else {
            value = Rational::parse(digits);
        }
        term.exact *= ExactScalar(value);
        term.value *= value.to_double();
    }

    std::string read_word() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\'')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return text_[pos_];
    }

    [[noreturn]] void fail(const std::string &message) const {
        fail_at(pos_, message);
    }
    [[noreturn]] void fail_at(std::size_t offset, const std::string &message) const {
        std::size_t line = origin_.line;
        std::size_t column = origin_.column;
        for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }

    std::string_view text_;
    TextOrigin origin_;
    bool allow_symbols_;
    std::size_t pos_ = 0;
};

std::string render_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string out(buf, end);
    if (out.find_first_of(".ein") == std::string::npos) {
        out += ".0";
    }
    return out;
}

}  // namespace

Complex to_complex(const ScalarLiteral &literal) {
    if (const auto *exact = std::get_if<ExactScalar>(&literal)) {
        return exact->to_complex();
    }
    return std::get<Complex>(literal);
}

ScalarLiteral parse_scalar(std::string_view text, TextOrigin origin) {
    std::vector<RawTerm> terms = TermLexer(text, origin, false).parse();
    bool floating = false;
    for (const RawTerm &t : terms) {
        floating = floating || t.floating;
    }
    if (floating) {
        Complex sum{};
        for (const RawTerm &t : terms) {
            sum += t.value;
        }
        return sum;
    }
    ExactScalar sum;
    for (const RawTerm &t : terms) {
        sum += t.exact;
    }
    return sum;
}

std::vector<AffineTerm> parse_affine(std::string_view text, TextOrigin origin) {
    std::vector<RawTerm> terms = TermLexer(text, origin, true).parse();
    std::vector<AffineTerm> out;
    for (RawTerm &t : terms) {
        if (t.floating) {
            throw ParseError("floating literal in affine expression '" + std::string(text) + "'", origin.line,
                             origin.column);
        }
        out.push_back({std::move(t.exact), std::move(t.symbol)});
    }
    return out;
}

std::string render_scalar(const ExactScalar &x) {
    return x.str();
}

std::string render_scalar(const Complex &z) {
    if (z.imag() == 0.0) {
        return render_double(z.real());
    }
    std::string im = render_double(std::abs(z.imag()));
    std::string sign = std::signbit(z.imag()) ? " - " : " + ";
    return render_double(z.real()) + sign + im + "*i";
}

}  // namespace slocc
