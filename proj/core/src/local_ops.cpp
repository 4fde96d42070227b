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

#include "slocc/local_ops.h"

#include <nlohmann/json.hpp>
#include <random>

#include "slocc/errors.h"
#include "slocc/scalar_text.h"

namespace slocc {

template <Scalar S>
LocalOperator<S>::LocalOperator(S a, S b, S c, S d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (is_zero(determinant())) {
        throw DomainError("local operator is not invertible (determinant 0)");
    }
}

template <Scalar S>
LocalOperator<S> LocalOperator<S>::inverse() const {
    S det = determinant();
    S inv;
    if constexpr (kIsExact<S>) {
        inv = det.inverse();
    } else {
        inv = S(1.0) / det;
    }
    return LocalOperator(m_[3] * inv, -m_[1] * inv, -m_[2] * inv, m_[0] * inv);
}

template class LocalOperator<ExactScalar>;
template class LocalOperator<Complex>;

template <Scalar S>
LocalOperatorSet<S>::LocalOperatorSet(std::vector<LocalOperator<S>> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw DomainError("operator set must act on at least one qubit");
    }
}

template <Scalar S>
LocalOperatorSet<S> LocalOperatorSet<S>::identity(int num_qubits) {
    std::vector<LocalOperator<S>> ops(num_qubits, LocalOperator<S>(S(1), S(0), S(0), S(1)));
    return LocalOperatorSet(std::move(ops));
}

template <Scalar S>
S LocalOperatorSet<S>::determinant_product() const {
    S out(1);
    for (const auto &op : ops_) {
        out *= op.determinant();
    }
    return out;
}

template <Scalar S>
LocalOperatorSet<S> LocalOperatorSet<S>::inverse() const {
    std::vector<LocalOperator<S>> out;
    for (const auto &op : ops_) {
        out.push_back(op.inverse());
    }
    return LocalOperatorSet(std::move(out));
}

template class LocalOperatorSet<ExactScalar>;
template class LocalOperatorSet<Complex>;

FloatOperator to_floating(const ExactOperator &op) {
    return FloatOperator(op.a().to_complex(), op.b().to_complex(), op.c().to_complex(), op.d().to_complex());
}

FloatOperatorSet to_floating(const ExactOperatorSet &ops) {
    std::vector<FloatOperator> out;
    for (const auto &op : ops.ops()) {
        out.push_back(to_floating(op));
    }
    return FloatOperatorSet(std::move(out));
}

namespace gates {

ExactOperator identity() {
    return {1, 0, 0, 1};
}
ExactOperator sigma_x() {
    return {0, 1, 1, 0};
}
ExactOperator sigma_y() {
    ExactScalar i = ExactScalar::imaginary_unit();
    return {0, -i, i, 0};
}
ExactOperator sigma_z() {
    return {1, 0, 0, -1};
}
ExactOperator i_identity() {
    ExactScalar i = ExactScalar::imaginary_unit();
    return {i, 0, 0, i};
}
ExactOperator i_sigma_z() {
    ExactScalar i = ExactScalar::imaginary_unit();
    return {i, 0, 0, -i};
}

}  // namespace gates

template <Scalar S>
PureState<S> apply_local(const PureState<S> &state, const LocalOperatorSet<S> &ops) {
    int n = state.num_qubits();
    if (ops.num_qubits() != n) {
        throw DomainError("operator set acts on " + std::to_string(ops.num_qubits()) + " qubits, state has " +
                          std::to_string(n));
    }
    std::vector<S> amps = state.amplitudes();
    for (int q = 1; q <= n; ++q) {
        const LocalOperator<S> &op = ops.on(q);
        std::size_t stride = std::size_t{1} << (n - q);
        for (std::size_t i0 = 0; i0 < amps.size(); ++i0) {
            if (i0 & stride) {
                continue;
            }
            std::size_t i1 = i0 | stride;
            const S x0 = amps[i0];
            const S x1 = amps[i1];
            if (is_zero(x0) && is_zero(x1)) {
                continue;
            }
            S y0{};
            S y1{};
            if (!is_zero(x0)) {
                if (!is_zero(op.a())) {
                    y0 += op.a() * x0;
                }
                if (!is_zero(op.c())) {
                    y1 += op.c() * x0;
                }
            }
            if (!is_zero(x1)) {
                if (!is_zero(op.b())) {
                    y0 += op.b() * x1;
                }
                if (!is_zero(op.d())) {
                    y1 += op.d() * x1;
                }
            }
            amps[i0] = std::move(y0);
            amps[i1] = std::move(y1);
        }
    }
    return PureState<S>(n, std::move(amps), state.labels());
}

template ExactState apply_local(const ExactState &, const ExactOperatorSet &);
template FloatState apply_local(const FloatState &, const FloatOperatorSet &);

template <Scalar S>
Matrix<S> kron_operators(const LocalOperatorSet<S> &ops, const std::vector<int> &qubits) {
    Matrix<S> out = Matrix<S>::identity(1);
    for (int q : qubits) {
        out = kron(out, ops.on(q).matrix());
    }
    return out;
}

template Matrix<ExactScalar> kron_operators(const ExactOperatorSet &, const std::vector<int> &);
template Matrix<Complex> kron_operators(const FloatOperatorSet &, const std::vector<int> &);

template <Scalar S>
CoefficientMatrix<S> transform_coefficient_matrix(const CoefficientMatrix<S> &c, const LocalOperatorSet<S> &ops) {
    if (ops.num_qubits() != c.bipartition.num_qubits()) {
        throw DomainError("operator set size does not match the bipartition");
    }
    Matrix<S> left = kron_operators(ops, c.bipartition.row_bits());
    Matrix<S> right = kron_operators(ops, c.bipartition.column_bits());
    return {c.bipartition, left * c.matrix * right.transpose()};
}

template CoefficientMatrix<ExactScalar> transform_coefficient_matrix(const CoefficientMatrix<ExactScalar> &,
                                                                     const ExactOperatorSet &);
template CoefficientMatrix<Complex> transform_coefficient_matrix(const CoefficientMatrix<Complex> &,
                                                                 const FloatOperatorSet &);

namespace {

constexpr int kMaxDraws = 1000;

}  // namespace

ExactOperatorSet random_exact_local_ops(int num_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> grid(-3, 3);
    auto entry = [&] {
        long re = grid(rng);
        long im = grid(rng);
        return ExactScalar(Rational(re), Rational(im), 0, 0);
    };
    std::vector<ExactOperator> ops;
    for (int q = 0; q < num_qubits; ++q) {
        for (int attempt = 0;; ++attempt) {
            if (attempt == kMaxDraws) {
                throw NumericError("could not draw an invertible operator");
            }
            ExactScalar a = entry(), b = entry(), c = entry(), d = entry();
            if (!(a * d - b * c).is_zero()) {
                ops.emplace_back(a, b, c, d);
                break;
            }
        }
    }
    return ExactOperatorSet(std::move(ops));
}

FloatOperatorSet random_floating_local_ops(int num_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto entry = [&] {
        double re = normal(rng);
        double im = normal(rng);
        return Complex(re, im);
    };
    std::vector<FloatOperator> ops;
    for (int q = 0; q < num_qubits; ++q) {
        for (int attempt = 0;; ++attempt) {
            if (attempt == kMaxDraws) {
                throw NumericError("could not draw a well-conditioned operator");
            }
            Complex a = entry(), b = entry(), c = entry(), d = entry();
            if (std::abs(a * d - b * c) > 1e-3) {
                ops.emplace_back(a, b, c, d);
                break;
            }
        }
    }
    return FloatOperatorSet(std::move(ops));
}

AnyOperatorSet parse_operator_file(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed operator file", line, column);
    }
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("operator file must be a nonempty array of 2x2 matrices");
    }
    std::vector<std::array<ScalarLiteral, 4>> entries;
    bool floating = false;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        const auto &m = doc[k];
        std::string where = "operator " + std::to_string(k + 1);
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
            m[1].size() != 2) {
            throw ParseError(where + " is not a 2x2 array");
        }
        std::array<ScalarLiteral, 4> e;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                if (!m[r][c].is_string()) {
                    throw ParseError(where + ": entries must be scalar strings");
                }
                try {
                    e[2 * r + c] = parse_scalar(m[r][c].get<std::string>());
                } catch (const ParseError &pe) {
                    throw ParseError(where + ", entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                     "): " + pe.reason());
                }
                floating = floating || is_floating(e[2 * r + c]);
            }
        }
        entries.push_back(std::move(e));
    }
    try {
        if (floating) {
            std::vector<FloatOperator> ops;
            for (const auto &e : entries) {
                ops.emplace_back(to_complex(e[0]), to_complex(e[1]), to_complex(e[2]), to_complex(e[3]));
            }
            return FloatOperatorSet(std::move(ops));
        }
        std::vector<ExactOperator> ops;
        for (const auto &e : entries) {
            ops.emplace_back(std::get<ExactScalar>(e[0]), std::get<ExactScalar>(e[1]), std::get<ExactScalar>(e[2]),
                             std::get<ExactScalar>(e[3]));
        }
        return ExactOperatorSet(std::move(ops));
    } catch (const DomainError &e) {
        throw ParseError(e.what());
    }
}

template <Scalar S>
std::string render_operator_file(const LocalOperatorSet<S> &ops) {
    auto q = [](const S &x) { return "\"" + render_scalar(x) + "\""; };
    std::string out = "[\n";
    for (std::size_t k = 0; k < ops.ops().size(); ++k) {
        const auto &op = ops.ops()[k];
        out += "  [[" + q(op.a()) + ", " + q(op.b()) + "], [" + q(op.c()) + ", " + q(op.d()) + "]]";
        out += k + 1 < ops.ops().size() ? ",\n" : "\n";
    }
    return out + "]\n";
}

template std::string render_operator_file(const ExactOperatorSet &);
template std::string render_operator_file(const FloatOperatorSet &);

}  // namespace slocc
