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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "slocc/bipartition.h"
#include "slocc/matrix.h"
#include "slocc/pure_state.h"

namespace slocc {

/// How ranks are decided.
///
/// Exact mode runs Bareiss elimination over Q(i, sqrt 2) and requires exact
/// scalars. Numeric mode counts singular values above `tolerance * sigma_max`
/// of the Frobenius-normalized matrix (with an absolute floor of 1e-12); a
/// tolerance of 0 selects the default 1e-10 * max(rows, cols).
struct RankMode {
    enum class Kind { kExact, kNumeric };

    Kind kind = Kind::kExact;
    double tolerance = 0.0;

    static RankMode exact() {
        return {Kind::kExact, 0.0};
    }
    static RankMode numeric(double tolerance = 0.0) {
        return {Kind::kNumeric, tolerance};
    }
    bool is_exact() const {
        return kind == Kind::kExact;
    }
    /// The relative tolerance actually used for a rows x cols matrix.
    double effective_tolerance(std::size_t rows, std::size_t cols) const;
};

inline constexpr double kAbsoluteSingularFloor = 1e-12;

/// A matricization of a state: entry (u, v) is the amplitude whose row bits
/// spell u and whose column bits spell v, both read in stored bit order.
template <Scalar S>
struct CoefficientMatrix {
    Bipartition bipartition;
    Matrix<S> matrix;

    std::size_t rows() const {
        return matrix.rows();
    }
    std::size_t cols() const {
        return matrix.cols();
    }
};

/// Builds C with the given ordered row bits; empty rows give the 1 x 2^n row
/// vector and all n bits the 2^n x 1 column vector.
template <Scalar S>
CoefficientMatrix<S> coefficient_matrix(const PureState<S> &state, std::span<const int> row_bits);
template <Scalar S>
CoefficientMatrix<S> coefficient_matrix(const PureState<S> &state, const Bipartition &split);

int rank(const Matrix<ExactScalar> &m, RankMode mode);
/// Throws DomainError in exact mode: floating input cannot be ranked exactly.
int rank(const Matrix<Complex> &m, RankMode mode);
template <Scalar S>
int rank(const CoefficientMatrix<S> &c, RankMode mode) {
    return rank(c.matrix, mode);
}

/// Singular values in descending order. Exact entries are evaluated in
/// double precision first.
std::vector<double> singular_values(const Matrix<ExactScalar> &m);
std::vector<double> singular_values(const Matrix<Complex> &m);
template <Scalar S>
std::vector<double> singular_values(const CoefficientMatrix<S> &c) {
    return singular_values(c.matrix);
}

/// Ranks of all canonical bipartitions of one state.
class RankSignature {
   public:
    /// Throws DomainError unless `ranks` covers exactly the canonical
    /// bipartitions of n qubits with admissible values.
    RankSignature(int num_qubits, std::map<Bipartition, int> ranks);

    int num_qubits() const {
        return num_qubits_;
    }
    /// Rank across any split; the split is canonicalized first.
    int rank(const Bipartition &split) const;
    int rank(std::vector<int> row_bits) const;

    const std::map<Bipartition, int> &entries() const {
        return ranks_;
    }
    /// Ranks in enumerate_bipartitions() order.
    std::vector<int> values() const;

    friend bool operator==(const RankSignature &, const RankSignature &) = default;

   private:
    int num_qubits_;
    std::map<Bipartition, int> ranks_;
};

template <Scalar S>
RankSignature rank_signature(const PureState<S> &state, RankMode mode);

/// rho = C C^dagger over the kept qubits, i.e. the reduced density matrix of
/// the (unnormalized) state with the other qubits traced out.
template <Scalar S>
Matrix<S> reduced_density(const PureState<S> &state, std::span<const int> kept_bits);

ExactScalar determinant(const Matrix<ExactScalar> &m);
Complex determinant(const Matrix<Complex> &m);

/// Determinant of the square coefficient matrix of an even-n state whose row
/// bits are `half_bits` (|half_bits| = n/2). |det|^2 equals det rho over the
/// same qubits.
template <Scalar S>
S det_coeff(const PureState<S> &state, std::span<const int> half_bits);

/// Debug dump: a `# rows=R cols=C row_bits=1,2 col_bits=3,4` header followed
/// by tab-separated canonical scalar strings, one matrix row per line.
template <Scalar S>
std::string dump_matrix(const CoefficientMatrix<S> &c);

}  // namespace slocc
