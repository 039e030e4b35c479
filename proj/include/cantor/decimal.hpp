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

#include <compare>
#include <string>

#include "cantor/rational.hpp"

namespace cantor {

// Fixed-point decimal real: value = mant / 10^scale. All binary operations
// require matching scales; results are truncated back to the common scale.
// Intended use is a precision budget of N digits with ~10 guard digits, so
// truncation error stays far below every tolerance in this project.
class Decimal {
public:
    Decimal() : mant_(0), scale_(0) {}
    Decimal(BigInt mant, int scale) : mant_(std::move(mant)), scale_(scale) {}

    static Decimal from_int(long v, int scale);
    static Decimal from_rational(const Rational& r, int scale);
    static Decimal from_double(double v, int scale);

    int scale() const { return scale_; }
    const BigInt& mantissa() const { return mant_; }
    bool is_zero() const { return mant_ == 0; }
    int sign() const { return sgn(mant_); }

    Decimal operator+(const Decimal& o) const;
    Decimal operator-(const Decimal& o) const;
    Decimal operator*(const Decimal& o) const;
    Decimal operator/(const Decimal& o) const;
    Decimal operator-() const { return Decimal(-mant_, scale_); }
    Decimal abs() const { return sign() < 0 ? -*this : *this; }

    std::strong_ordering operator<=>(const Decimal& o) const;
    bool operator==(const Decimal& o) const = default;

    Decimal mul_pow2(long k) const;   // *2^k, exact up to the fixed scale
    Decimal rescaled(int new_scale) const;

    Rational to_rational() const;
    double to_double() const;
    /// Decimal string with `digits` fractional digits (digits <= scale).
    std::string str(int digits) const;

    // Elementary functions at the operand's scale. pow requires base > 0.
    static Decimal ln2(int scale);
    static Decimal ln(const Decimal& x);
    static Decimal exp(const Decimal& x);
    static Decimal pow(const Decimal& base, const Decimal& expo);
    static Decimal sqrt(const Decimal& x);

private:
    BigInt unit() const;  // 10^scale
    BigInt mant_;
    int scale_;
};

} // namespace cantor
