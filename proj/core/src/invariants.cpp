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

#include "slocc/invariants.h"

#include <array>

#include "slocc/coefficient_matrix.h"
#include "slocc/errors.h"

namespace slocc {

namespace {

template <Scalar S>
void require_four_qubits(const PureState<S> &state, const char *what) {
    if (state.num_qubits() != 4) {
        throw DomainError(std::string(what) + " is defined for four qubits only");
    }
}

template <Scalar S>
S det3(const std::array<S, 9> &d) {
    return d[0] * (d[4] * d[8] - d[5] * d[7]) - d[1] * (d[3] * d[8] - d[5] * d[6]) +
           d[2] * (d[3] * d[7] - d[4] * d[6]);
}

// (x0 x7 - x2 x5 + x1 x6 - x3 x4)^2 - 4 (x2 x4 - x0 x6)(x3 x5 - x1 x7) on eight
// amplitudes.
template <Scalar S>
S semi_invariant_form(const S *x) {
    S first = x[0] * x[7] - x[2] * x[5] + x[1] * x[6] - x[3] * x[4];
    return first * first - S(4) * (x[2] * x[4] - x[0] * x[6]) * (x[3] * x[5] - x[1] * x[7]);
}

ExactScalar half_of(const ExactScalar &x) {
    return x * ExactScalar(Rational(1, 2));
}

// det A_2 * det A_3 * det A_4.
ExactScalar tail_determinants(const ExactOperatorSet &ops) {
    if (ops.num_qubits() != 4) {
        throw DomainError("orbit laws need four operators");
    }
    return ops.on(2).determinant() * ops.on(3).determinant() * ops.on(4).determinant();
}

ExactScalar lab3_prime_form(const ExactScalar &a, const ExactScalar &b, const ExactScalar &x1, const ExactScalar &x2,
                            const ExactOperatorSet &ops) {
    const ExactScalar i = ExactScalar::imaginary_unit();
    const ExactScalar r2 = ExactScalar::sqrt2();
    ExactScalar p = tail_determinants(ops);
    // -i / (2 sqrt2) = -i sqrt2 / 4
    ExactScalar prefactor = -i * r2 * ExactScalar(Rational(1, 4));
    ExactScalar inner = -i * r2 * (ExactScalar(3) * a * a + b * b) * x1 + ExactScalar(8) * a * (a * a - b * b) * x2;
    return prefactor * pow(x1, 3) * inner * p * p;
}

}  // namespace

template <Scalar S>
S d_xy(const PureState<S> &state) {
    require_four_qubits(state, "D_xy");
    const auto &a = state.amplitudes();
    std::array<S, 9> d = {
        a[0] * a[3] - a[1] * a[2],
        a[0] * a[7] - a[1] * a[6] - a[2] * a[5] + a[3] * a[4],
        a[4] * a[7] - a[5] * a[6],
        a[0] * a[11] - a[1] * a[10] - a[2] * a[9] + a[3] * a[8],
        a[0] * a[15] - a[1] * a[14] - a[2] * a[13] + a[3] * a[12] + a[4] * a[11] - a[5] * a[10] - a[6] * a[9] +
            a[7] * a[8],
        a[4] * a[15] - a[5] * a[14] - a[6] * a[13] + a[7] * a[12],
        a[8] * a[11] - a[9] * a[10],
        a[8] * a[15] - a[9] * a[14] - a[10] * a[13] + a[11] * a[12],
        a[12] * a[15] - a[13] * a[14],
    };
    return det3(d);
}

template ExactScalar d_xy(const ExactState &);
template Complex d_xy(const FloatState &);

template <Scalar S>
S f1(const PureState<S> &state) {
    require_four_qubits(state, "F1");
    return semi_invariant_form(state.amplitudes().data());
}

template <Scalar S>
S f2(const PureState<S> &state) {
    require_four_qubits(state, "F2");
    const S *c = state.amplitudes().data();
    S first = c[8] * c[15] - c[11] * c[12] + c[9] * c[14] - c[10] * c[13];
    return first * first - S(4) * (c[11] * c[13] - c[9] * c[15]) * (c[10] * c[12] - c[8] * c[14]);
}

template ExactScalar f1(const ExactState &);
template Complex f1(const FloatState &);
template ExactScalar f2(const ExactState &);
template Complex f2(const FloatState &);

template <Scalar S>
S dxy_covariance_factor(const LocalOperatorSet<S> &ops) {
    if (ops.num_qubits() != 4) {
        throw DomainError("D_xy covariance needs four operators");
    }
    S p = ops.determinant_product();
    return p * p * p;
}

template ExactScalar dxy_covariance_factor(const ExactOperatorSet &);
template Complex dxy_covariance_factor(const FloatOperatorSet &);

template <Scalar S>
InvariantReport<S> invariant_report(const PureState<S> &state) {
    require_four_qubits(state, "invariant report");
    const std::array<int, 2> ab{1, 2};
    const std::array<int, 2> ac{1, 3};
    const std::array<int, 2> ad{1, 4};
    return {d_xy(state),
            f1(state),
            f2(state),
            det_coeff(state, std::span<const int>(ab)),
            det_coeff(state, std::span<const int>(ac)),
            det_coeff(state, std::span<const int>(ad))};
}

template InvariantReport<ExactScalar> invariant_report(const ExactState &);
template InvariantReport<Complex> invariant_report(const FloatState &);

ExactScalar closed_form_dxy(std::string_view family, const Bindings &params) {
    auto v = [&](const char *name) { return binding(params, name); };
    if (family == "G_abcd") {
        ExactScalar al = v("alpha"), be = v("beta"), ga = v("gamma"), de = v("delta");
        return (al * be - ga * de) * (al * be + ga * de) * (al * al + be * be - ga * ga - de * de);
    }
    if (family == "L_abc2") {
        ExactScalar al = v("alpha"), be = v("beta"), ga = v("gamma");
        ExactScalar ab = al * be;
        return ab * ab * (al * al - ga * ga + be * be);
    }
    if (family == "L_ab3" || family == "L_ab3'") {
        ExactScalar a = v("a"), b = v("b");
        return -ExactScalar(Rational(1, 32)) * pow(a - b, 3) * pow(a + b, 3);
    }
    throw DomainError("no closed form of D_xy for family '" + std::string(family) + "'");
}

ExactScalar lab3_f1_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops) {
    ExactScalar p = tail_determinants(ops);
    return half_of(a * a - b * b) * pow(ops.on(1).a(), 4) * p * p;
}

ExactScalar lab3_f2_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops) {
    ExactScalar p = tail_determinants(ops);
    return half_of(a * a - b * b) * pow(ops.on(1).c(), 4) * p * p;
}

ExactScalar lab3_prime_f1_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops) {
    return lab3_prime_form(a, b, ops.on(1).a(), ops.on(1).b(), ops);
}

ExactScalar lab3_prime_f2_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops) {
    return lab3_prime_form(a, b, ops.on(1).c(), ops.on(1).d(), ops);
}

ExactOperator semi_invariant_annihilator(const ExactScalar &a, const ExactScalar &b, const ExactScalar &alpha1,
                                         const ExactScalar &alpha4) {
    ExactScalar denom = ExactScalar(8) * a * (a * a - b * b);
    if (denom.is_zero()) {
        throw DomainError("annihilator needs a(a^2 - b^2) != 0");
    }
    if ((alpha1 * alpha4).is_zero()) {
        throw DomainError("annihilator needs alpha1 * alpha4 != 0");
    }
    ExactScalar k = ExactScalar::imaginary_unit() * ExactScalar::sqrt2() * (ExactScalar(3) * a * a + b * b) / denom;
    return ExactOperator(alpha1, k * alpha1, 0, alpha4);
}

}  // namespace slocc
