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

#include "cantor/decimal.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace cantor {

namespace {

BigInt pow10(int n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(n));
    return r;
}

// Truncating division toward zero (mpz_tdiv).
BigInt tdiv(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void check_scales(const Decimal& a, const Decimal& b) {
    if (a.scale() != b.scale())
        throw invalid_input("decimal scale mismatch");
}

} // namespace

BigInt Decimal::unit() const { return pow10(scale_); }

Decimal Decimal::from_int(long v, int scale) {
    return Decimal(BigInt(v) * pow10(scale), scale);
}

Decimal Decimal::from_rational(const Rational& r, int scale) {
    return Decimal(tdiv(r.num() * pow10(scale), r.den()), scale);
}

Decimal Decimal::from_double(double v, int scale) {
    // Route through a rational with denominator 2^64 for an exact conversion.
    int e = 0;
    double m = std::frexp(v, &e);
    auto mant = static_cast<long long>(std::ldexp(m, 62));
    Rational r(BigInt(std::to_string(mant)), BigInt(1));
    BigInt two_pow;
    int shift = 62 - e;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
    r = shift >= 0 ? r / Rational(two_pow) : r * Rational(two_pow);
    return from_rational(r, scale);
}

Decimal Decimal::operator+(const Decimal& o) const {
    check_scales(*this, o);
    return Decimal(mant_ + o.mant_, scale_);
}

Decimal Decimal::operator-(const Decimal& o) const {
    check_scales(*this, o);
    return Decimal(mant_ - o.mant_, scale_);
}

Decimal Decimal::operator*(const Decimal& o) const {
    check_scales(*this, o);
    return Decimal(tdiv(mant_ * o.mant_, unit()), scale_);
}

Decimal Decimal::operator/(const Decimal& o) const {
    check_scales(*this, o);
    if (o.mant_ == 0) throw invalid_input("decimal division by zero");
    return Decimal(tdiv(mant_ * unit(), o.mant_), scale_);
}

std::strong_ordering Decimal::operator<=>(const Decimal& o) const {
    check_scales(*this, o);
    int c = cmp(mant_, o.mant_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Decimal Decimal::mul_pow2(long k) const {
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
    if (k >= 0) return Decimal(mant_ * two_pow, scale_);
    return Decimal(tdiv(mant_, two_pow), scale_);
}

Decimal Decimal::rescaled(int new_scale) const {
    if (new_scale == scale_) return *this;
    if (new_scale > scale_) return Decimal(mant_ * pow10(new_scale - scale_), new_scale);
    return Decimal(tdiv(mant_, pow10(scale_ - new_scale)), new_scale);
}

Rational Decimal::to_rational() const { return Rational(mant_, unit()); }

double Decimal::to_double() const {
    mpq_class q(mant_, unit());
    q.canonicalize();
    return q.get_d();
}

std::string Decimal::str(int digits) const {
    if (digits > scale_) digits = scale_;
    Decimal d = rescaled(digits);
    BigInt mag = ::abs(d.mant_);
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (d.sign() < 0) out += "-";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

Decimal Decimal::ln2(int scale) {
    // ln 2 = 2 * atanh(1/3) = 2 * sum_{j>=0} (1/3)^(2j+1) / (2j+1)
    int work = scale + 8;
    BigInt u = pow10(work);
    BigInt term = u / 3;  // (1/3)^1
    BigInt sum = term;
    unsigned long j = 1;
    while (term != 0) {
        term = term / 9;
        sum += term / (2 * j + 1);
        ++j;
    }
    return Decimal(2 * sum, work).rescaled(scale);
}

Decimal Decimal::ln(const Decimal& x) {
    if (x.sign() <= 0) throw invalid_input("ln of non-positive value");
    int scale = x.scale_;
    int work = scale + 8;
    Decimal y = x.rescaled(work);
    Decimal one = from_int(1, work);
    Decimal lo = from_rational(Rational(3, 4), work);
    Decimal hi = from_rational(Rational(3, 2), work);
    long k = 0;
    while (y >= hi) {
        y = y.mul_pow2(-1);
        ++k;
    }
    while (y < lo) {
        y = y.mul_pow2(1);
        --k;
    }
    // atanh series: ln y = 2 * sum z^(2j+1)/(2j+1), z = (y-1)/(y+1), |z| <= 1/5
    Decimal z = (y - one) / (y + one);
    Decimal z2 = z * z;
    Decimal term = z;
    Decimal sum = z;
    unsigned long j = 1;
    while (!term.is_zero()) {
        term = term * z2;
        sum = sum + Decimal(tdiv(term.mantissa(), BigInt(2 * j + 1)), work);
        ++j;
    }
    Decimal r = sum.mul_pow2(1);
    if (k != 0) {
        Decimal l2 = ln2(work);
        r = r + Decimal(l2.mantissa() * BigInt(k), work);
    }
    return r.rescaled(scale);
}

Decimal Decimal::exp(const Decimal& x) {
    int scale = x.scale_;
    int work = scale + 10;
    Decimal w = x.rescaled(work);
    Decimal l2 = ln2(work);
    // w = k*ln2 + r with |r| <= ln2/2
    BigInt k2 = tdiv(w.mantissa() * 2, l2.mantissa());
    long k = (mpz_get_si(k2.get_mpz_t()) + (sgn(k2) >= 0 ? 1 : -1)) / 2;
    Decimal r = w - Decimal(l2.mantissa() * BigInt(k), work);
    Decimal term = from_int(1, work);
    Decimal sum = term;
    unsigned long n = 1;
    while (!term.is_zero()) {
        term = term * r;
        term = Decimal(tdiv(term.mantissa(), BigInt(n)), work);
        sum = sum + term;
        ++n;
        if (n > 10000) throw resource_limit("exp series did not terminate");
    }
    return sum.mul_pow2(k).rescaled(scale);
}

Decimal Decimal::pow(const Decimal& base, const Decimal& expo) {
    return exp(expo * ln(base));
}

Decimal Decimal::sqrt(const Decimal& x) {
    if (x.sign() < 0) throw invalid_input("sqrt of negative value");
    // sqrt(m/10^s) = isqrt(m*10^s)/10^s
    BigInt v = x.mant_ * pow10(x.scale_);
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return Decimal(r, x.scale_);
}

} // namespace cantor
