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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/pure_state.h"

namespace slocc {

struct CheckResult {
    std::string name;
    int trials = 0;
    int passed = 0;
    std::uint64_t seed = 0;
    /// First failing trial, empty on success.
    std::string counterexample;

    bool ok() const {
        return passed == trials;
    }
};

/// rank-invariance, matrix-transform, dxy-covariance, kron-rank, density-det,
/// semi-invariants, operator-identities.
const std::vector<std::string> &check_names();

/// Runs a property check; trial t uses seed + t. Throws DomainError for an
/// unknown name or trials < 1.
CheckResult run_check(std::string_view name, int trials, std::uint64_t seed);

/// A random exact state with structure: the qubits are split into random
/// blocks, each block drawn with sparse Gaussian-integer amplitudes.
ExactState random_exact_state(int num_qubits, std::mt19937_64 &rng);

/// Same as random_exact_state() without block structure.
ExactState random_dense_exact_state(int num_qubits, std::mt19937_64 &rng);

}  // namespace slocc
