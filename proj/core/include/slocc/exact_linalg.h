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

#include <optional>
#include <vector>

#include "slocc/matrix.h"

namespace slocc {

/// Rank by fraction-free (Bareiss) elimination with full pivoting on exact
/// nonzero tests. Entries stay equal to minors of the input, which bounds
/// coefficient growth.
int bareiss_rank(Matrix<ExactScalar> m);

/// Determinant by Bareiss elimination. Throws DomainError for non-square input.
ExactScalar bareiss_determinant(Matrix<ExactScalar> m);

/// Solution of a x = b when the system is consistent and has exactly one
/// solution; std::nullopt otherwise.
std::optional<std::vector<ExactScalar>> solve_unique(const Matrix<ExactScalar> &a,
                                                     const std::vector<ExactScalar> &b);

}  // namespace slocc
