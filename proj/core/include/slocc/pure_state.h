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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slocc/scalar.h"

namespace slocc {

/// Dense storage limit: 2^20 amplitudes.
inline constexpr int kMaxQubits = 20;

/// Default qubit names: A, B, C, ... for n <= 26, otherwise Q1..Qn.
std::vector<std::string> default_labels(int num_qubits);

/// Bit of basis index `index` belonging to 1-based qubit `qubit`.
/// Qubit 1 is the most significant bit.
inline unsigned qubit_bit(std::uint64_t index, int qubit, int num_qubits) {
    return static_cast<unsigned>((index >> (num_qubits - qubit)) & 1U);
}

/// An unnormalized n-qubit pure state sum_i a_i |i>, qubit 1 being the most
/// significant bit of i. Immutable after construction.
template <Scalar S>
class PureState {
   public:
    /// Throws DomainError if n is outside 1..kMaxQubits, the amplitude count is
    /// not 2^n, all amplitudes are zero, labels have the wrong count, or a
    /// floating amplitude is not finite.
    PureState(int num_qubits, std::vector<S> amplitudes, std::vector<std::string> labels = {});

    /// The computational basis ket |index>.
    static PureState basis(int num_qubits, std::uint64_t index);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t dimension() const {
        return amplitudes_.size();
    }
    const std::vector<S> &amplitudes() const {
        return amplitudes_;
    }
    const S &operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }

    PureState with_labels(std::vector<std::string> labels) const {
        return PureState(num_qubits_, amplitudes_, std::move(labels));
    }

    friend bool operator==(const PureState &a, const PureState &b) {
        return a.num_qubits_ == b.num_qubits_ && a.amplitudes_ == b.amplitudes_;
    }

   private:
    int num_qubits_;
    std::vector<S> amplitudes_;
    std::vector<std::string> labels_;
};

using ExactState = PureState<ExactScalar>;
using FloatState = PureState<Complex>;

/// A parsed state of either scalar kind.
using AnyState = std::variant<ExactState, FloatState>;

FloatState to_floating(const ExactState &state);
FloatState to_floating(const AnyState &state);

/// Bijection on qubit positions {1..n}: the qubit at position q moves to
/// position image(q).
class QubitPermutation {
   public:
    /// `image[k]` is the 1-based destination of qubit k+1. Throws DomainError
    /// unless it is a bijection on {1..n}.
    explicit QubitPermutation(std::vector<int> image);

    static QubitPermutation identity(int num_qubits);
    /// The transposition (i j) of two 1-based positions.
    static QubitPermutation transposition(int num_qubits, int i, int j);
    /// Parses a product of cycles such as "(1,2)(1,3)" or "I". Products
    /// compose like functions: the rightmost cycle acts first.
    static QubitPermutation parse_cycles(int num_qubits, std::string_view text);

    int num_qubits() const {
        return static_cast<int>(image_.size());
    }
    int operator()(int position) const {
        return image_[position - 1];
    }
    const std::vector<int> &image() const {
        return image_;
    }
    bool is_identity() const;

    QubitPermutation inverse() const;
    /// Function composition: (a * b)(q) = a(b(q)).
    friend QubitPermutation operator*(const QubitPermutation &a, const QubitPermutation &b);
    friend bool operator==(const QubitPermutation &, const QubitPermutation &) = default;

    /// One-line form of the image, e.g. "[2 1 3 4]".
    std::string str() const;

   private:
    std::vector<int> image_;
};

/// Combines two states into one register. `left_positions[k]` is the 1-based
/// position in the combined register of the left factor's qubit k+1; the right
/// factor's qubits fill the remaining positions in ascending order.
template <Scalar S>
PureState<S> tensor(const PureState<S> &left, const PureState<S> &right,
                    std::span<const int> left_positions);

/// Mixed-kind tensor: exact iff both factors are exact.
AnyState tensor(const AnyState &left, const AnyState &right, std::span<const int> left_positions);

/// Relocates qubits: the amplitude of the permuted basis index equals the
/// original amplitude. Labels travel with their qubits.
template <Scalar S>
PureState<S> permute_qubits(const PureState<S> &state, const QubitPermutation &perm);

/// Multiplies every amplitude by a nonzero constant.
template <Scalar S>
PureState<S> scale(const PureState<S> &state, const S &factor);

/// True when `a == c * b` for some nonzero scalar c (exact comparison;
/// floating states compare with relative tolerance `tolerance`).
bool proportional(const ExactState &a, const ExactState &b);
bool proportional(const FloatState &a, const FloatState &b, double tolerance = 1e-9);

}  // namespace slocc
