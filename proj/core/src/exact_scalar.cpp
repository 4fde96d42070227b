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

#include "slocc/exact_scalar.h"

#include <array>
#include <cmath>
#include <numbers>

#include "slocc/errors.h"

namespace slocc {

namespace {

// Basis 1, i, sqrt2, i*sqrt2. kProduct[a][b] = {index, factor} with
// e_a * e_b = factor * e_index.
struct BasisProduct {
    int index;
    int factor;
};
constexpr BasisProduct kProduct[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, 1}, {0, 2}, {1, 2}},
    {{3, 1}, {2, -1}, {1, 2}, {0, -2}},
};

void append_term(std::string &out, const Rational &c, const char *unit) {
    if (c.is_zero()) {
        return;
    }
    bool negative = c.sign() < 0;
    Rational magnitude = negative ? -c : c;
    if (out.empty()) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (unit[0] == '\0') {
        out += magnitude.str();
    } else if (magnitude == Rational(1)) {
        out += unit;
    } else {
        out += magnitude.str();
        out += "*";
        out += unit;
    }
}

}  // namespace

ExactScalar &ExactScalar::operator+=(const ExactScalar &o) {
    p_ += o.p_;
    q_ += o.q_;
    r_ += o.r_;
    s_ += o.s_;
    return *this;
}

ExactScalar &ExactScalar::operator-=(const ExactScalar &o) {
    p_ -= o.p_;
    q_ -= o.q_;
    r_ -= o.r_;
    s_ -= o.s_;
    return *this;
}

ExactScalar &ExactScalar::operator*=(const ExactScalar &o) {
    *this = *this * o;
    return *this;
}

ExactScalar operator*(const ExactScalar &x, const ExactScalar &y) {
    const mpq_class *xs[4] = {&x.p_.raw(), &x.q_.raw(), &x.r_.raw(), &x.s_.raw()};
    const mpq_class *ys[4] = {&y.p_.raw(), &y.q_.raw(), &y.r_.raw(), &y.s_.raw()};
    std::array<mpq_class, 4> acc;
    mpq_class term;
    for (int a = 0; a < 4; ++a) {
        if (sgn(*xs[a]) == 0) {
            continue;
        }
        for (int b = 0; b < 4; ++b) {
            if (sgn(*ys[b]) == 0) {
                continue;
            }
            const BasisProduct &e = kProduct[a][b];
            mpq_mul(term.get_mpq_t(), xs[a]->get_mpq_t(), ys[b]->get_mpq_t());
            if (e.factor == 1) {
                acc[e.index] += term;
            } else if (e.factor == -1) {
                acc[e.index] -= term;
            } else {
                term *= e.factor;
                acc[e.index] += term;
            }
        }
    }
    return {Rational(acc[0]), Rational(acc[1]), Rational(acc[2]), Rational(acc[3])};
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    // x = z + w*sqrt2 with Gaussian rationals z, w; x * (z - w*sqrt2) = z^2 - 2 w^2.
    ExactScalar partner(p_, q_, -r_, -s_);
    ExactScalar norm = *this * partner;
    // norm is a Gaussian rational u + v*i.
    const Rational &u = norm.p_;
    const Rational &v = norm.q_;
    Rational modulus = u * u + v * v;
    ExactScalar norm_inverse(u / modulus, -v / modulus, 0, 0);
    return partner * norm_inverse;
}

std::complex<double> ExactScalar::to_complex() const {
    constexpr double kSqrt2 = std::numbers::sqrt2;
    return {p_.to_double() + r_.to_double() * kSqrt2, q_.to_double() + s_.to_double() * kSqrt2};
}

std::string ExactScalar::str() const {
    std::string out;
    append_term(out, p_, "");
    append_term(out, q_, "i");
    append_term(out, r_, "r2");
    append_term(out, s_, "i*r2");
    return out.empty() ? "0" : out;
}

ExactScalar pow(const ExactScalar &base, unsigned exponent) {
    ExactScalar result(1);
    ExactScalar square = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= square;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            square *= square;
        }
    }
    return result;
}

}  // namespace slocc
