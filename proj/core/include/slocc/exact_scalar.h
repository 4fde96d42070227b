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

#include <complex>
#include <string>

#include "slocc/rational.h"

namespace slocc {

/// Element of the number field Q(i, sqrt 2), stored as
/// p + q*i + (r + s*i)*sqrt(2) with rational p, q, r, s.
///
/// Every amplitude of the four-qubit normal forms handled here (including the
/// i/sqrt(2) coefficients) lies in this field for rational parameters, so all
/// rank and invariant computations on them are exact.
class ExactScalar {
   public:
    ExactScalar() = default;
    ExactScalar(long value) : p_(value) {
    }
    ExactScalar(Rational real) : p_(std::move(real)) {
    }
    ExactScalar(Rational p, Rational q, Rational r, Rational s)
        : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    }

    static ExactScalar imaginary_unit() {
        return {0, 1, 0, 0};
    }
    static ExactScalar sqrt2() {
        return {0, 0, 1, 0};
    }

    const Rational &p() const {
        return p_;
    }
    const Rational &q() const {
        return q_;
    }
    const Rational &r() const {
        return r_;
    }
    const Rational &s() const {
        return s_;
    }

    bool is_zero() const {
        return p_.is_zero() && q_.is_zero() && r_.is_zero() && s_.is_zero();
    }
    /// True when q = r = s = 0.
    bool is_rational() const {
        return q_.is_zero() && r_.is_zero() && s_.is_zero();
    }

    /// Complex conjugate: p - q*i + (r - s*i)*sqrt(2).
    ExactScalar conj() const {
        return {p_, -q_, r_, -s_};
    }
    /// Multiplicative inverse. Throws DomainError for zero.
    ExactScalar inverse() const;

    std::complex<double> to_complex() const;

    /// Canonical text form: terms in (1, i, r2, i*r2) order, zero terms omitted,
    /// e.g. "1/2 - 3*i*r2". Zero renders as "0".
    std::string str() const;

    ExactScalar operator-() const {
        return {-p_, -q_, -r_, -s_};
    }
    ExactScalar &operator+=(const ExactScalar &o);
    ExactScalar &operator-=(const ExactScalar &o);
    ExactScalar &operator*=(const ExactScalar &o);
    ExactScalar &operator/=(const ExactScalar &o) {
        return *this *= o.inverse();
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar &b) {
        return a += b;
    }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar &b) {
        return a -= b;
    }
    friend ExactScalar operator*(const ExactScalar &a, const ExactScalar &b);
    friend ExactScalar operator/(ExactScalar a, const ExactScalar &b) {
        return a /= b;
    }

    friend bool operator==(const ExactScalar &a, const ExactScalar &b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_;
    }

   private:
    Rational p_, q_, r_, s_;
};

/// Integer power by repeated squaring; exponent >= 0.
ExactScalar pow(const ExactScalar &base, unsigned exponent);

}  // namespace slocc
