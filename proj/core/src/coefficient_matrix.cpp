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

#include "slocc/coefficient_matrix.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "bit_layout.h"
#include "slocc/errors.h"
#include "slocc/exact_linalg.h"

namespace slocc {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix<Complex> &m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

Matrix<Complex> to_floating(const Matrix<ExactScalar> &m) {
    std::vector<Complex> data;
    data.reserve(m.data().size());
    for (const ExactScalar &x : m.data()) {
        data.push_back(x.to_complex());
    }
    return Matrix<Complex>(m.rows(), m.cols(), std::move(data));
}

std::string join(const std::vector<int> &bits) {
    std::string out;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (k) {
            out += ",";
        }
        out += std::to_string(bits[k]);
    }
    return out;
}

}  // namespace

double RankMode::effective_tolerance(std::size_t rows, std::size_t cols) const {
    if (tolerance > 0.0) {
        return tolerance;
    }
    return 1e-10 * static_cast<double>(std::max(rows, cols));
}

template <Scalar S>
CoefficientMatrix<S> coefficient_matrix(const PureState<S> &state, const Bipartition &split) {
    int n = state.num_qubits();
    if (split.num_qubits() != n) {
        throw DomainError("bipartition of " + std::to_string(split.num_qubits()) + " qubits applied to a " +
                          std::to_string(n) + "-qubit state");
    }
    auto roff = detail::placement_offsets(split.row_bits(), n);
    auto coff = detail::placement_offsets(split.column_bits(), n);
    Matrix<S> m(roff.size(), coff.size());
    for (std::size_t u = 0; u < roff.size(); ++u) {
        for (std::size_t v = 0; v < coff.size(); ++v) {
            m(u, v) = state[roff[u] | coff[v]];
        }
    }
    return {split, std::move(m)};
}

template <Scalar S>
CoefficientMatrix<S> coefficient_matrix(const PureState<S> &state, std::span<const int> row_bits) {
    return coefficient_matrix(state, Bipartition(state.num_qubits(), std::vector<int>(row_bits.begin(), row_bits.end())));
}

template CoefficientMatrix<ExactScalar> coefficient_matrix(const ExactState &, const Bipartition &);
template CoefficientMatrix<Complex> coefficient_matrix(const FloatState &, const Bipartition &);
template CoefficientMatrix<ExactScalar> coefficient_matrix(const ExactState &, std::span<const int>);
template CoefficientMatrix<Complex> coefficient_matrix(const FloatState &, std::span<const int>);

std::vector<double> singular_values(const Matrix<Complex> &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return {};
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto &sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> singular_values(const Matrix<ExactScalar> &m) {
    return singular_values(to_floating(m));
}

int rank(const Matrix<ExactScalar> &m, RankMode mode) {
    if (mode.is_exact()) {
        return bareiss_rank(m);
    }
    return rank(to_floating(m), mode);
}

int rank(const Matrix<Complex> &m, RankMode mode) {
    if (mode.is_exact()) {
        throw DomainError("exact rank requested for a floating matrix");
    }
    double frob = 0.0;
    for (const Complex &z : m.data()) {
        frob += std::norm(z);
    }
    frob = std::sqrt(frob);
    if (!std::isfinite(frob)) {
        throw NumericError("matrix entries overflow double precision");
    }
    if (frob == 0.0) {
        return 0;
    }
    std::vector<Complex> scaled;
    scaled.reserve(m.data().size());
    for (const Complex &z : m.data()) {
        scaled.push_back(z / frob);
    }
    std::vector<double> sv = singular_values(Matrix<Complex>(m.rows(), m.cols(), std::move(scaled)));
    if (sv.empty()) {
        return 0;
    }
    double threshold = std::max(mode.effective_tolerance(m.rows(), m.cols()) * sv.front(), kAbsoluteSingularFloor);
    return static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > threshold; }));
}

RankSignature::RankSignature(int num_qubits, std::map<Bipartition, int> ranks)
    : num_qubits_(num_qubits), ranks_(std::move(ranks)) {
    auto splits = enumerate_bipartitions(num_qubits_);
    if (splits.size() != ranks_.size()) {
        throw DomainError("rank signature must cover the " + std::to_string(splits.size()) +
                          " canonical bipartitions");
    }
    for (const Bipartition &s : splits) {
        auto it = ranks_.find(s);
        if (it == ranks_.end()) {
            throw DomainError("rank signature misses bipartition " + s.name());
        }
        long long bound = std::min<long long>(1LL << s.row_bits().size(), 1LL << s.column_bits().size());
        if (it->second < 1 || it->second > bound) {
            throw DomainError("rank " + std::to_string(it->second) + " out of range for " + s.name());
        }
    }
}

int RankSignature::rank(const Bipartition &split) const {
    Bipartition key = split.canonical();
    if (key.row_bits().empty()) {
        return 1;
    }
    auto it = ranks_.find(key);
    if (it == ranks_.end()) {
        throw DomainError("bipartition does not belong to this signature");
    }
    return it->second;
}

int RankSignature::rank(std::vector<int> row_bits) const {
    return rank(Bipartition(num_qubits_, std::move(row_bits)));
}

std::vector<int> RankSignature::values() const {
    std::vector<int> out;
    for (const Bipartition &s : enumerate_bipartitions(num_qubits_)) {
        out.push_back(ranks_.at(s));
    }
    return out;
}

template <Scalar S>
RankSignature rank_signature(const PureState<S> &state, RankMode mode) {
    std::map<Bipartition, int> ranks;
    for (const Bipartition &s : enumerate_bipartitions(state.num_qubits())) {
        ranks.emplace(s, rank(coefficient_matrix(state, s), mode));
    }
    return RankSignature(state.num_qubits(), std::move(ranks));
}

template RankSignature rank_signature(const ExactState &, RankMode);
template RankSignature rank_signature(const FloatState &, RankMode);

template <Scalar S>
Matrix<S> reduced_density(const PureState<S> &state, std::span<const int> kept_bits) {
    Matrix<S> c = coefficient_matrix(state, kept_bits).matrix;
    return c * c.adjoint();
}

template Matrix<ExactScalar> reduced_density(const ExactState &, std::span<const int>);
template Matrix<Complex> reduced_density(const FloatState &, std::span<const int>);

ExactScalar determinant(const Matrix<ExactScalar> &m) {
    return bareiss_determinant(m);
}

Complex determinant(const Matrix<Complex> &m) {
    if (!m.is_square()) {
        throw DomainError("determinant of a non-square matrix");
    }
    if (m.rows() == 0) {
        return Complex(1.0);
    }
    return to_eigen(m).partialPivLu().determinant();
}

template <Scalar S>
S det_coeff(const PureState<S> &state, std::span<const int> half_bits) {
    int n = state.num_qubits();
    if (n % 2 != 0) {
        throw DomainError("det_coeff needs an even number of qubits");
    }
    if (static_cast<int>(half_bits.size()) != n / 2) {
        throw DomainError("det_coeff needs exactly n/2 row bits");
    }
    return determinant(coefficient_matrix(state, half_bits).matrix);
}

template ExactScalar det_coeff(const ExactState &, std::span<const int>);
template Complex det_coeff(const FloatState &, std::span<const int>);

template <Scalar S>
std::string dump_matrix(const CoefficientMatrix<S> &c) {
    std::string out = "# rows=" + std::to_string(c.rows()) + " cols=" + std::to_string(c.cols()) +
                      " row_bits=" + join(c.bipartition.row_bits()) + " col_bits=" + join(c.bipartition.column_bits()) +
                      "\n";
    for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t k = 0; k < c.cols(); ++k) {
            if (k) {
                out += "\t";
            }
            out += render_scalar(c.matrix(r, k));
        }
        out += "\n";
    }
    return out;
}

template std::string dump_matrix(const CoefficientMatrix<ExactScalar> &);
template std::string dump_matrix(const CoefficientMatrix<Complex> &);

}  // namespace slocc
