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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace slocc {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long value) : value_(value) {
    }
    Rational(const BigInt &numerator, const BigInt &denominator);
    explicit Rational(const mpq_class &value) : value_(value) {
        value_.canonicalize();
    }

    /// Parses `INT` or `INT/POSINT` (optional leading sign, no whitespace).
    static Rational parse(std::string_view text);

    BigInt numerator() const {
        return value_.get_num();
    }
    BigInt denominator() const {
        return value_.get_den();
    }
    int sign() const {
        return sgn(value_);
    }
    bool is_zero() const {
        return sgn(value_) == 0;
    }
    bool is_integer() const {
        return value_.get_den() == 1;
    }

    double to_double() const {
        return value_.get_d();
    }
    const mpq_class &raw() const {
        return value_;
    }

    /// `p` or `p/q`.
    std::string str() const;

    Rational operator-() const {
        return Rational(mpq_class(-value_), Canonical{});
    }
    Rational &operator+=(const Rational &o) {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        value_ *= o.value_;
        return *this;
    }
    /// Throws DomainError on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b) {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b) {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b) {
        return a /= b;
    }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    struct Canonical {};
    Rational(mpq_class &&value, Canonical) : value_(std::move(value)) {
    }

    // gmpxx keeps results of arithmetic canonical; only raw num/den
    // construction needs explicit canonicalization.
    mpq_class value_;
};

}  // namespace slocc
