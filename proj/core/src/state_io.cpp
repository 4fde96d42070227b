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

#include "slocc/state_io.h"

#include <cctype>
#include <optional>

#include "slocc/errors.h"
#include "slocc/scalar_text.h"

namespace slocc {

namespace {

struct QuotedString {
    std::string text;
    TextOrigin origin;
};

class StateReader {
   public:
    explicit StateReader(std::string_view text) : text_(text) {
    }

    AnyState read() {
        std::optional<int> n;
        std::optional<std::vector<QuotedString>> amps;
        std::optional<std::vector<QuotedString>> labels;
        TextOrigin amps_at;

        skip_space();
        expect('{');
        skip_space();
        if (peek_is('}')) {
            fail("missing field 'n'");
        }
        while (true) {
            skip_space();
            TextOrigin key_at = here();
            std::string key = read_key();
            skip_space();
            expect(':');
            skip_space();
            if (key == "n") {
                if (n) {
                    fail_at(key_at, "duplicate field 'n'");
                }
                n = read_int();
            } else if (key == "amps") {
                if (amps) {
                    fail_at(key_at, "duplicate field 'amps'");
                }
                amps_at = here();
                amps = read_string_array();
            } else if (key == "labels") {
                if (labels) {
                    fail_at(key_at, "duplicate field 'labels'");
                }
                labels = read_string_array();
            } else {
                fail_at(key_at, "unknown field '" + key + "'");
            }
            skip_space();
            if (peek_is(',')) {
                ++pos_;
                continue;
            }
            expect('}');
            break;
        }
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected text after the closing '}'");
        }
        if (!n) {
            fail("missing field 'n'");
        }
        if (!amps) {
            fail("missing field 'amps'");
        }
        if (*n < 1 || *n > kMaxQubits) {
            throw ParseError("n must be in 1.." + std::to_string(kMaxQubits), 1, 1);
        }
        std::size_t expected = std::size_t{1} << *n;
        if (amps->size() != expected) {
            fail_at(amps_at, "expected " + std::to_string(expected) + " amplitudes for n = " + std::to_string(*n) +
                                 ", got " + std::to_string(amps->size()));
        }
        std::vector<std::string> label_text;
        if (labels) {
            if (static_cast<int>(labels->size()) != *n) {
                fail("expected " + std::to_string(*n) + " labels, got " + std::to_string(labels->size()));
            }
            for (auto &l : *labels) {
                if (l.text.empty()) {
                    fail_at(l.origin, "empty qubit label");
                }
                label_text.push_back(l.text);
            }
        }

        std::vector<ScalarLiteral> literals;
        bool floating = false;
        for (const auto &a : *amps) {
            literals.push_back(parse_scalar(a.text, a.origin));
            floating = floating || is_floating(literals.back());
        }
        bool all_zero = true;
        for (const auto &lit : literals) {
            all_zero = all_zero && is_zero(to_complex(lit)) &&
                       (is_floating(lit) || std::get<ExactScalar>(lit).is_zero());
        }
        if (all_zero) {
            fail_at(amps_at, "all amplitudes are zero: not a state");
        }
        try {
            if (floating) {
                std::vector<Complex> values;
                for (const auto &lit : literals) {
                    values.push_back(to_complex(lit));
                }
                return FloatState(*n, std::move(values), std::move(label_text));
            }
            std::vector<ExactScalar> values;
            for (auto &lit : literals) {
                values.push_back(std::get<ExactScalar>(std::move(lit)));
            }
            return ExactState(*n, std::move(values), std::move(label_text));
        } catch (const DomainError &e) {
            fail_at(amps_at, e.what());
        }
    }

   private:
    std::string read_key() {
        if (peek_is('"')) {
            return read_string().text;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a field name");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    int read_int() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_ || pos_ - start > 6) {
            pos_ = start;
            fail("expected a small non-negative integer");
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::vector<QuotedString> read_string_array() {
        expect('[');
        std::vector<QuotedString> out;
        skip_space();
        if (peek_is(']')) {
            ++pos_;
            return out;
        }
        while (true) {
            skip_space();
            out.push_back(read_string());
            skip_space();
            if (peek_is(',')) {
                ++pos_;
                continue;
            }
            expect(']');
            return out;
        }
    }

    QuotedString read_string() {
        expect('"');
        QuotedString out;
        out.origin = here();
        while (true) {
            if (pos_ >= text_.size()) {
                fail("unterminated string");
            }
            char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                return out;
            }
            if (c == '\\') {
                fail("escape sequences are not supported");
            }
            if (c == '\n') {
                fail("newline inside string");
            }
            out.text += c;
            ++pos_;
        }
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool peek_is(char c) const {
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek_is(c)) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    TextOrigin here() const {
        TextOrigin at;
        for (std::size_t k = 0; k < pos_; ++k) {
            if (text_[k] == '\n') {
                ++at.line;
                at.column = 1;
            } else {
                ++at.column;
            }
        }
        return at;
    }

    [[noreturn]] void fail(const std::string &message) const {
        fail_at(here(), message);
    }
    [[noreturn]] static void fail_at(TextOrigin at, const std::string &message) {
        throw ParseError(message, at.line, at.column);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string quoted(const std::string &s) {
    return "\"" + s + "\"";
}

}  // namespace

AnyState parse_state(std::string_view text) {
    return StateReader(text).read();
}

template <Scalar S>
std::string render_state(const PureState<S> &state) {
    std::string out = "{n: " + std::to_string(state.num_qubits()) + ", amps: [";
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (i) {
            out += ", ";
        }
        out += quoted(render_scalar(state[i]));
    }
    out += "]";
    if (state.labels() != default_labels(state.num_qubits())) {
        out += ", labels: [";
        for (std::size_t k = 0; k < state.labels().size(); ++k) {
            if (k) {
                out += ", ";
            }
            out += quoted(state.labels()[k]);
        }
        out += "]";
    }
    return out + "}\n";
}

template std::string render_state(const ExactState &);
template std::string render_state(const FloatState &);

std::string render_state(const AnyState &state) {
    return std::visit([](const auto &s) { return render_state(s); }, state);
}

}  // namespace slocc
