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

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slocc/scalar.h"

namespace slocc {

/// Where a piece of text starts inside a larger document, so that parse
/// errors can report absolute positions. Both fields are 1-based.
struct TextOrigin {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// A scalar literal: exact when every number in it is `INT` or `INT/POSINT`,
/// floating as soon as one number has a decimal point or exponent.
using ScalarLiteral = std::variant<ExactScalar, Complex>;

inline bool is_floating(const ScalarLiteral &literal) {
    return std::holds_alternative<Complex>(literal);
}
Complex to_complex(const ScalarLiteral &literal);

/// Parses a sum of signed terms such as `1/2 + 1/2*i*r2` or `-3*i`.
///
/// A term is a number optionally followed by `*i`, `*r2` or `*i*r2`; the
/// number may be omitted before a unit (`i`, `-r2`). Whitespace is ignored.
ScalarLiteral parse_scalar(std::string_view text, TextOrigin origin = {});

/// One additive term `coefficient * symbol` of an affine expression; an empty
/// symbol marks the constant part.
struct AffineTerm {
    ExactScalar coefficient;
    std::string symbol;
};

/// Parses an affine expression over named parameters, e.g.
/// `1/2*a - 1/2*b + 1/2*i*r2`. Each term carries at most one symbol; `i` and
/// `r2` are reserved. Terms are returned in input order, not merged.
/// Floating literals are rejected: affine expressions are exact.
std::vector<AffineTerm> parse_affine(std::string_view text, TextOrigin origin = {});

}  // namespace slocc
