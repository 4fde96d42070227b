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

#include <string_view>

#include "slocc/bindings.h"
#include "slocc/local_ops.h"
#include "slocc/pure_state.h"

namespace slocc {

/// Degree-6 four-qubit invariant D_xy: the 3x3 determinant of the quadratic
/// forms d11..d33 in the amplitudes. Throws DomainError unless n = 4.
///
/// Under |psi'> = A_1 (x) ... (x) A_4 |psi>,
/// D_xy(psi') = D_xy(psi) * (det A_1 ... det A_4)^3.
template <Scalar S>
S d_xy(const PureState<S> &state);

/// Semi-invariants on the first (F1: c0..c7) and last (F2: c8..c15) halves
/// of the amplitude vector:
///   F1 = (c0c7 - c2c5 + c1c6 - c3c4)^2 - 4 (c2c4 - c0c6)(c3c5 - c1c7)
/// and F2 the same form on c8..c15.
template <Scalar S>
S f1(const PureState<S> &state);
template <Scalar S>
S f2(const PureState<S> &state);

/// (prod_i det A_i)^3 for a four-qubit operator set.
template <Scalar S>
S dxy_covariance_factor(const LocalOperatorSet<S> &ops);

template <Scalar S>
struct InvariantReport {
    S d_xy;
    S f1;
    S f2;
    /// det C_AB, det C_AC, det C_AD: degree-4 invariants whose squared moduli
    /// are det rho_AB, det rho_AC, det rho_AD.
    S det_ab;
    S det_ac;
    S det_ad;
};

template <Scalar S>
InvariantReport<S> invariant_report(const PureState<S> &state);

/// Closed forms of D_xy on the parametric families:
///   G_abcd:  (alpha beta - gamma delta)(alpha beta + gamma delta)(alpha^2 + beta^2 - gamma^2 - delta^2)
///   L_abc2:  (alpha beta)^2 (alpha^2 - gamma^2 + beta^2)
///   L_ab3, L_ab3':  -(a - b)^3 (a + b)^3 / 32
/// Throws DomainError for other family names or missing parameters.
ExactScalar closed_form_dxy(std::string_view family, const Bindings &params);

/// Predicted F1/F2 of A_1 (x) ... (x) A_4 applied to L_ab3(a, b):
///   F1 = (a^2 - b^2)/2 * alpha1^4 * (det A_2 det A_3 det A_4)^2
///   F2 = (a^2 - b^2)/2 * alpha3^4 * (det A_2 det A_3 det A_4)^2
/// where A_1 = [[alpha1, alpha2], [alpha3, alpha4]].
ExactScalar lab3_f1_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops);
ExactScalar lab3_f2_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops);

/// Predicted F1/F2 on the orbit of L_ab3'(a, b):
///   F1 = -i/(2 sqrt2) alpha1^3 (-i sqrt2 (3a^2 + b^2) alpha1 + 8a(a^2 - b^2) alpha2) * P^2
///   F2 = -i/(2 sqrt2) alpha3^3 (-i sqrt2 (3a^2 + b^2) alpha3 + 8a(a^2 - b^2) alpha4) * P^2
/// with P = det A_2 det A_3 det A_4.
ExactScalar lab3_prime_f1_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops);
ExactScalar lab3_prime_f2_orbit(const ExactScalar &a, const ExactScalar &b, const ExactOperatorSet &ops);

/// First-qubit operator [[alpha1, k alpha1], [0, alpha4]] with
/// k = i sqrt2 (3a^2 + b^2) / (8a(a^2 - b^2)); it sends both semi-invariants
/// of the L_ab3' orbit to zero. Requires a(a^2 - b^2) != 0 and
/// alpha1 alpha4 != 0 (DomainError otherwise).
ExactOperator semi_invariant_annihilator(const ExactScalar &a, const ExactScalar &b, const ExactScalar &alpha1,
                                         const ExactScalar &alpha4);

}  // namespace slocc
