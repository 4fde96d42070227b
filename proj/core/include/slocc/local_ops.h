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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slocc/coefficient_matrix.h"
#include "slocc/matrix.h"
#include "slocc/pure_state.h"

namespace slocc {

/// An invertible single-qubit operator [[a, b], [c, d]].
template <Scalar S>
class LocalOperator {
   public:
    /// Throws DomainError when ad - bc is (exactly) zero.
    LocalOperator(S a, S b, S c, S d);

    const S &a() const {
        return m_[0];
    }
    const S &b() const {
        return m_[1];
    }
    const S &c() const {
        return m_[2];
    }
    const S &d() const {
        return m_[3];
    }
    const S &operator()(int row, int col) const {
        return m_[2 * row + col];
    }

    S determinant() const {
        return m_[0] * m_[3] - m_[1] * m_[2];
    }
    LocalOperator inverse() const;
    Matrix<S> matrix() const {
        return Matrix<S>(2, 2, {m_[0], m_[1], m_[2], m_[3]});
    }

    friend LocalOperator operator*(const LocalOperator &x, const LocalOperator &y) {
        return LocalOperator(x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
                             x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]);
    }
    friend bool operator==(const LocalOperator &, const LocalOperator &) = default;

   private:
    std::array<S, 4> m_;
};

/// One invertible operator per qubit, acting as A_1 (x) A_2 (x) ... (x) A_n.
template <Scalar S>
class LocalOperatorSet {
   public:
    explicit LocalOperatorSet(std::vector<LocalOperator<S>> ops);

    static LocalOperatorSet identity(int num_qubits);

    int num_qubits() const {
        return static_cast<int>(ops_.size());
    }
    /// Operator acting on 1-based qubit `qubit`.
    const LocalOperator<S> &on(int qubit) const {
        return ops_.at(qubit - 1);
    }
    const std::vector<LocalOperator<S>> &ops() const {
        return ops_;
    }

    /// Product of the n determinants.
    S determinant_product() const;
    LocalOperatorSet inverse() const;
    /// Per-qubit product: (a * b) acts as b first, then a.
    friend LocalOperatorSet operator*(const LocalOperatorSet &a, const LocalOperatorSet &b) {
        if (a.num_qubits() != b.num_qubits()) {
            throw DomainError("operator sets act on different qubit counts");
        }
        std::vector<LocalOperator<S>> out;
        for (std::size_t k = 0; k < a.ops_.size(); ++k) {
            out.push_back(a.ops_[k] * b.ops_[k]);
        }
        return LocalOperatorSet(std::move(out));
    }
    friend bool operator==(const LocalOperatorSet &, const LocalOperatorSet &) = default;

   private:
    std::vector<LocalOperator<S>> ops_;
};

using ExactOperator = LocalOperator<ExactScalar>;
using ExactOperatorSet = LocalOperatorSet<ExactScalar>;
using FloatOperator = LocalOperator<Complex>;
using FloatOperatorSet = LocalOperatorSet<Complex>;
using AnyOperatorSet = std::variant<ExactOperatorSet, FloatOperatorSet>;

FloatOperator to_floating(const ExactOperator &op);
FloatOperatorSet to_floating(const ExactOperatorSet &ops);

/// Named exact operators.
namespace gates {
ExactOperator identity();
ExactOperator sigma_x();
ExactOperator sigma_y();
ExactOperator sigma_z();
/// i * I
ExactOperator i_identity();
/// i * sigma_z
ExactOperator i_sigma_z();
}  // namespace gates

/// |psi'> = A_1 (x) ... (x) A_n |psi>, applied one qubit at a time.
template <Scalar S>
PureState<S> apply_local(const PureState<S> &state, const LocalOperatorSet<S> &ops);

/// (A_{row bits}) C (A_{column bits})^T with the Kronecker factors taken in
/// the stored bit orders. Equals the coefficient matrix of apply_local() on
/// the same split.
template <Scalar S>
CoefficientMatrix<S> transform_coefficient_matrix(const CoefficientMatrix<S> &c,
                                                  const LocalOperatorSet<S> &ops);

/// Tensor product of the operators on `qubits`, in the given order.
template <Scalar S>
Matrix<S> kron_operators(const LocalOperatorSet<S> &ops, const std::vector<int> &qubits);

/// Deterministic random operator sets.
///
/// Exact: entries from {-3..3} + {-3..3}i, redrawn until det != 0.
/// Floating: standard normal real and imaginary parts, redrawn until
/// |det| > 1e-3. Both throw NumericError after 1000 failed draws of one
/// operator.
ExactOperatorSet random_exact_local_ops(int num_qubits, std::uint64_t seed);
FloatOperatorSet random_floating_local_ops(int num_qubits, std::uint64_t seed);

/// Reads the operator file format: a JSON array of n entries, each a 2x2
/// array of scalar strings, e.g. `[[["1","0"],["0","1"]], ...]`. Exact unless
/// some entry is floating. Throws ParseError.
AnyOperatorSet parse_operator_file(std::string_view text);
template <Scalar S>
std::string render_operator_file(const LocalOperatorSet<S> &ops);

}  // namespace slocc
