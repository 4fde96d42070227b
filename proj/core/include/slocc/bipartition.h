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

#include <compare>
#include <string>
#include <vector>

namespace slocc {

/// A split of the register into ordered row bits and column bits (1-based
/// qubit positions). Column bits are the complement of the row bits in
/// register order.
class Bipartition {
   public:
    /// Throws DomainError on duplicate or out-of-range bits.
    Bipartition(int num_qubits, std::vector<int> row_bits);
    /// Row and column bits both in a chosen order; together they must
    /// partition {1..n}. Throws DomainError otherwise.
    static Bipartition with_columns(int num_qubits, std::vector<int> row_bits, std::vector<int> column_bits);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<int> &row_bits() const {
        return row_bits_;
    }
    const std::vector<int> &column_bits() const {
        return column_bits_;
    }

    /// Representative of the unordered split {S, complement}: the smaller
    /// side, ties broken by the side holding qubit 1, bits ascending.
    Bipartition canonical() const;
    bool is_canonical() const;
    /// Row and column bits exchanged (column bits keep their stored order).
    Bipartition swapped() const;

    /// Concatenated labels of the row bits, e.g. "AB".
    std::string name(const std::vector<std::string> &labels) const;
    std::string name() const;

    friend bool operator==(const Bipartition &a, const Bipartition &b) {
        return a.num_qubits_ == b.num_qubits_ && a.row_bits_ == b.row_bits_ && a.column_bits_ == b.column_bits_;
    }
    /// Size first, then lexicographic on row bits: the enumeration order.
    friend std::strong_ordering operator<=>(const Bipartition &a, const Bipartition &b);

   private:
    Bipartition(int num_qubits, std::vector<int> row_bits, std::vector<int> column_bits);

    int num_qubits_;
    std::vector<int> row_bits_;
    std::vector<int> column_bits_;
};

/// The 2^(n-1) - 1 canonical bipartitions of n qubits ordered by size, then
/// lexicographically: for n = 4, A B C D AB AC AD.
std::vector<Bipartition> enumerate_bipartitions(int num_qubits);

/// Parses qubit names such as "AB" or "A,C" (comma-separated when labels are
/// longer than one character) into 1-based positions.
std::vector<int> parse_bits(const std::string &text, const std::vector<std::string> &labels);

}  // namespace slocc
