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
#include <vector>

#include "slocc/pure_state.h"

namespace slocc::detail {

// offsets[i] = the register index contributed by local index i of a group of
// qubits placed at `positions` (1-based) in an n-qubit register.
inline std::vector<std::uint64_t> placement_offsets(const std::vector<int> &positions, int n) {
    int k = static_cast<int>(positions.size());
    std::vector<std::uint64_t> offsets(std::size_t{1} << k, 0);
    for (std::uint64_t local = 0; local < offsets.size(); ++local) {
        std::uint64_t combined = 0;
        for (int q = 1; q <= k; ++q) {
            if (qubit_bit(local, q, k)) {
                combined |= std::uint64_t{1} << (n - positions[q - 1]);
            }
        }
        offsets[local] = combined;
    }
    return offsets;
}

}  // namespace slocc::detail
