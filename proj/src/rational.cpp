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

#include "cantor/rational.hpp"

#include <cctype>

namespace cantor {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw invalid_input("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw invalid_input("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (a.empty() || b.empty()) throw invalid_input("malformed rational: " + s);
        try {
            return Rational(BigInt(a), BigInt(b));
        } catch (const std::invalid_argument&) {
            throw invalid_input("malformed rational: " + s);
        }
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw invalid_input("malformed decimal: " + s);
        bool neg = head[0] == '-';
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        try {
            BigInt whole(head);
            BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
            BigInt n = ::abs(whole) * scale + f;
            if (neg) n = -n;
            return Rational(n, scale);
        } catch (const std::invalid_argument&) {
            throw invalid_input("malformed decimal: " + s);
        }
    }
    try {
        return Rational(BigInt(s));
    } catch (const std::invalid_argument&) {
        throw invalid_input("malformed integer: " + s);
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw invalid_input("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    BigInt lhs = num_ * o.den_, rhs = o.num_ * den_;
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned long e) const {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), e);
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;  // already reduced since num/den were coprime
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::decimal_str(int digits) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled = ::abs(num_) * scale / den_;
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (sgn(num_) < 0) out += "-";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

double Rational::to_double() const {
    mpq_class q(num_, den_);
    q.canonicalize();
    return q.get_d();
}

} // namespace cantor
