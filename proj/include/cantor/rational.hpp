/* Copyright 2026 The cantor-density Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cantor/errors.hpp"

namespace cantor {

using BigInt = mpz_class;

/// Exact rational with normalized sign (den > 0) and gcd-reduced terms.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}               // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : num_(n), den_(1) {}      // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d);

    /// Accepts "a/b", plain integers, and decimal literals like "0.25".
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    Rational pow(unsigned long e) const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "num/den", or just "num" when den == 1.
    std::string str() const;
    /// Decimal expansion truncated toward zero to `digits` fractional digits.
    std::string decimal_str(int digits) const;
    double to_double() const;

private:
    void normalize();
    BigInt num_, den_;
};

inline Rational operator*(long a, const Rational& r) { return Rational(a) * r; }

} // namespace cantor
