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

#include <complex>
#include <concepts>
#include <string>

#include "slocc/exact_scalar.h"

namespace slocc {

using Complex = std::complex<double>;

/// The two amplitude fields supported by every state and matrix operation.
template <typename S>
concept Scalar = std::same_as<S, ExactScalar> || std::same_as<S, Complex>;

template <Scalar S>
inline constexpr bool kIsExact = std::same_as<S, ExactScalar>;

inline bool is_zero(const ExactScalar &x) {
    return x.is_zero();
}
inline bool is_zero(const Complex &z) {
    return z == Complex{};
}

inline ExactScalar conjugate(const ExactScalar &x) {
    return x.conj();
}
inline Complex conjugate(const Complex &z) {
    return std::conj(z);
}

inline Complex to_complex(const ExactScalar &x) {
    return x.to_complex();
}
inline Complex to_complex(const Complex &z) {
    return z;
}

/// Canonical text for a scalar. Floating values always carry a decimal point
/// or exponent so they re-parse as floating.
std::string render_scalar(const ExactScalar &x);
std::string render_scalar(const Complex &z);

}  // namespace slocc
