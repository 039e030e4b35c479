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

#include <doctest.h>

#include <random>

#include "cantor/decimal.hpp"
#include "cantor/rational.hpp"

using namespace cantor;

TEST_CASE("rational arithmetic and normalization") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.str() == "1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) - Rational(1, 2)) == Rational(-1, 6));
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK((Rational(2, 3) / Rational(4, 3)) == Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 3).pow(3) == Rational(1, 27));
    CHECK_THROWS_AS(Rational(1, 0), invalid_input);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), invalid_input);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("4/117") == Rational(4, 117));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.2") == Rational(-1, 5));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/2/3x"), invalid_input);
    CHECK_THROWS_AS(Rational::parse(""), invalid_input);
}

TEST_CASE("rational decimal expansion") {
    CHECK(Rational(1, 4).decimal_str(4) == "0.2500");
    CHECK(Rational(1, 3).decimal_str(6) == "0.333333");
    CHECK(Rational(-1, 8).decimal_str(3) == "-0.125");
    CHECK(Rational(4, 117).to_double() == doctest::Approx(0.034188034188).epsilon(1e-12));
}

TEST_CASE("rational arithmetic agrees with int64 reference on random inputs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int i = 0; i < 500; ++i) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational x(a, b), y(c, d);
        CHECK((x + y) == Rational(a * d + c * b, b * d));
        CHECK((x * y) == Rational(a * c, b * d));
        CHECK(((x < y)) == (a * d < c * b));
    }
}

TEST_CASE("decimal ln and exp against known digits") {
    const int S = 60;
    CHECK(Decimal::ln2(S).str(40) == "0.6931471805599453094172321214581765680755");
    Decimal three = Decimal::from_int(3, S);
    CHECK(Decimal::ln(three).str(40) == "1.0986122886681096913952452369225257046474");
    Decimal one = Decimal::from_int(1, S);
    CHECK(Decimal::exp(one).str(40) == "2.7182818284590452353602874713526624977572");
    Decimal five = Decimal::from_int(5, S);
    CHECK(Decimal::sqrt(five).str(40) == "2.2360679774997896964091736687312762354406");
}

TEST_CASE("decimal ln/exp inverse identities") {
    const int S = 60;
    for (long v : {2L, 7L, 10L, 123L}) {
        Decimal x = Decimal::from_rational(Rational(v, 10), S);
        Decimal back = Decimal::exp(Decimal::ln(x));
        Decimal diff = (back - x).abs();
        CHECK(diff < Decimal::from_rational(Rational(1, 1000000), S).mul_pow2(-140));
    }
}

TEST_CASE("decimal pow composes with rational powers") {
    const int S = 60;
    Decimal x = Decimal::from_rational(Rational(5, 7), S);
    Decimal two = Decimal::from_int(2, S);
    Decimal direct = x * x;
    Decimal via_pow = Decimal::pow(x, two);
    CHECK((direct - via_pow).abs() < Decimal(BigInt(1000000), S));  // 1e-54 slack
}

TEST_CASE("decimal from_double round trip") {
    for (double v : {0.5, 0.25, 1.0 / 3.0, 1.7872316, 2.0}) {
        Decimal d = Decimal::from_double(v, 40);
        CHECK(d.to_double() == doctest::Approx(v).epsilon(1e-15));
    }
}
