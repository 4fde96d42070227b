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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slocc/coefficient_matrix.h"
#include "slocc/pure_state.h"

namespace slocc {

/// A factor of a product state together with the register positions its
/// qubits occupy (factor qubit k+1 sits at positions[k]).
template <Scalar S>
struct PlacedFactor {
    PureState<S> state;
    std::vector<int> positions;
};

/// The product of all factors; their positions must partition {1..n}.
template <Scalar S>
PureState<S> tensor_all(std::span<const PlacedFactor<S>> factors);

/// Rank of C_{row_bits} of the product state computed factor by factor:
/// the product over factors of the rank of that factor's coefficient matrix
/// whose row bits are row_bits restricted to the factor. Throws DomainError
/// when placements overlap or leave gaps.
template <Scalar S>
int recursive_rank(std::span<const PlacedFactor<S>> factors, std::span<const int> row_bits, RankMode mode);

/// Outcome of a rank-1 test across a split S | complement.
template <Scalar S>
struct SplitTest {
    bool biseparable = false;
    /// When biseparable: |phi>_S on the qubits of S (ascending) and
    /// |phi>_complement, whose tensor product reproduces the input.
    std::optional<std::pair<PureState<S>, PureState<S>>> factors;
};

/// rank(C_S) == 1 test with factor reconstruction. `subset` must be a proper
/// nonempty subset of {1..n}.
template <Scalar S>
SplitTest<S> is_biseparable_across(const PureState<S> &state, std::span<const int> subset, RankMode mode);

/// Finest product decomposition of a state: disjoint qubit blocks such that
/// the state factors across every union of blocks and across nothing finer.
class SeparabilityPartition {
   public:
    /// Blocks are normalized: each sorted ascending, then ordered by (size,
    /// lexicographic). Throws DomainError unless they partition {1..n}.
    SeparabilityPartition(int num_qubits, std::vector<std::vector<int>> blocks);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<std::vector<int>> &blocks() const {
        return blocks_;
    }
    bool is_fully_separable() const {
        return static_cast<int>(blocks_.size()) == num_qubits_;
    }
    bool is_genuinely_entangled() const {
        return blocks_.size() == 1 && num_qubits_ > 1;
    }
    /// Blocks joined with en dashes, e.g. "A–B–CD", "AB–CD", "ABCD".
    std::string label(const std::vector<std::string> &labels) const;
    std::string label() const;

    friend bool operator==(const SeparabilityPartition &, const SeparabilityPartition &) = default;

   private:
    int num_qubits_;
    std::vector<std::vector<int>> blocks_;
};

/// Parses a family label such as "A–B–CD" (en dash or ASCII '-') against
/// qubit labels.
SeparabilityPartition parse_family_label(const std::string &label, const std::vector<std::string> &labels);

/// Tests every canonical split for rank 1, then merges qubits that no rank-1
/// split separates.
template <Scalar S>
SeparabilityPartition separability_partition(const PureState<S> &state, RankMode mode);

/// Same as separability_partition() on a precomputed signature.
SeparabilityPartition separability_partition(const RankSignature &signature);

/// The degenerate-family label of a state (n >= 2); a single block means the
/// state is genuinely entangled.
template <Scalar S>
std::string degenerate_family(const PureState<S> &state, RankMode mode);

}  // namespace slocc
