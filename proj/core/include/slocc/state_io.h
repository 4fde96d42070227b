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

#include <string>
#include <string_view>

#include "slocc/pure_state.h"

namespace slocc {

/// Reads the state file format:
///
///     {n: 2, amps: ["1", "0", "0", "1"], labels: ["A", "B"]}
///
/// Keys may be bare or double-quoted; `labels` is optional; whitespace and
/// newlines are insignificant. Amplitude strings use the scalar grammar of
/// parse_scalar(). The state is exact unless some amplitude is floating, in
/// which case every amplitude is converted to floating.
///
/// Throws ParseError (with line and column) on syntax errors, a wrong
/// amplitude count, or an all-zero amplitude vector.
AnyState parse_state(std::string_view text);

/// Canonical rendering; parse_state(render_state(s)) == s bit for bit.
/// Labels are written only when they differ from default_labels(n).
template <Scalar S>
std::string render_state(const PureState<S> &state);
std::string render_state(const AnyState &state);

}  // namespace slocc
