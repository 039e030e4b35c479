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

#include <cmath>

#include "cantor/density.hpp"

using namespace cantor;

namespace {

RhoParams third() { return RhoParams::make(Rational(1, 3)); }

// min/max of mu(B(x,r))/(2r)^s over a multiplicative radius grid; the exact
// powers rho^k are degenerate sampling points at rho = 1/3 (a ball of radius
// rho^k covers exactly one level-k cylinder), hence the j/24 refinement.
std::pair<double, double> ratio_scan(const Rational& x, const RhoParams& p) {
    double s = p.s_double();
    double mn = 1e18, mx = 0;
    for (int k = 4; k <= 14; ++k) {
        for (int j = 24; j >= 9; --j) {
            Rational r = p.rho().pow(k) * Rational(j, 24);
            auto enc = ball_measure(x, r, p, k + 16);
            double denom = std::pow(2 * r.to_double(), s);
            mn = std::min(mn, enc.lo.to_double() / denom);
            mx = std::max(mx, enc.hi.to_double() / denom);
        }
    }
    return {mn, mx};
}

} // namespace

TEST_CASE("factor-two law at tau = 0 across rho values") {
    for (auto rho : {Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(3, 10)}) {
        RhoParams p = RhoParams::make(rho);
        Decimal ratio = d_star_upper(p) / d_star_lower(p);
        double err = std::fabs(ratio.to_double() - 2.0);
        CHECK(err < 1e-12);
    }
}

TEST_CASE("almost-sure constants at rho = 1/3") {
    RhoParams p = third();
    CHECK(d_star_lower(p).to_double() == doctest::Approx(0.41700612892108).epsilon(1e-10));
    CHECK(d_star_upper(p).to_double() == doctest::Approx(0.83401225784216).epsilon(1e-10));
}

TEST_CASE("lower density domain guard and monotonicity") {
    RhoParams p = third();
    CHECK_THROWS_AS(lower_density_from_tau(Rational(-1, 10), p), invalid_input);
    CHECK_THROWS_AS(lower_density_from_tau(Rational(1, 2), p), invalid_input);
    Rational t_g = p.rho() / (Rational(1) + p.rho());
    CHECK_NOTHROW(lower_density_from_tau(t_g, p));  // finite at the right end
    Decimal prev = lower_density_from_tau(Rational(0), p);
    for (int k = 1; k <= 16; ++k) {
        Decimal cur = lower_density_from_tau(t_g * Rational(k, 16), p);
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("upper density branches and monotonicity") {
    RhoParams p = third();
    auto endpoint = upper_density_from_coding(EpSeq::zeros(), p);
    CHECK(endpoint.endpoint_case);
    CHECK(endpoint.value.to_double() == doctest::Approx(std::pow(2.0, -p.s_double())).epsilon(1e-12));
    auto after_one_step = upper_density_from_coding(EpSeq::parse("1(0)"), p);
    CHECK(after_one_step.endpoint_case);
    auto generic = upper_density_from_coding(EpSeq::parse("(01)"), p);
    CHECK_FALSE(generic.endpoint_case);
    double expect = 1.0 / std::pow(2.0, p.s_double()) /
                    std::pow(1 - 1.0 / 3 + (1.0 / 3) * (1.0 / 4), p.s_double());
    CHECK(generic.value.to_double() == doctest::Approx(expect).epsilon(1e-12));
    // strictly decreasing in tau along the generic branch: compare via the
    // formula at grid points through codings of increasing tau
    RhoParams q = third();
    Decimal u1 = upper_density_from_coding(EpSeq::parse("(001)"), q).value;  // tau = 1/13
    Decimal u2 = upper_density_from_coding(EpSeq::parse("(01)"), q).value;   // tau = 1/4
    CHECK(u2 < u1);
}

TEST_CASE("upper/lower ratio identity along the generic branch") {
    RhoParams p = third();
    int ws = p.work_scale();
    Decimal two = Decimal::from_int(2, ws);
    for (const char* text : {"(001)", "(01)", "(0001)", "(001011)"}) {
        EpSeq d = EpSeq::parse(text);
        Rational tau = tau_exact(d, p);
        Decimal ratio = upper_density_from_coding(d, p).value / lower_density_from_tau(tau, p);
        // ratio == 2 ((1 - rho - tau)/(1 - rho + rho tau))^s
        Rational num = Rational(1) - p.rho() - tau;
        Rational den = Rational(1) - p.rho() + p.rho() * tau;
        Decimal expect =
            two * Decimal::pow(Decimal::from_rational(num, ws) / Decimal::from_rational(den, ws),
                               p.s());
        CHECK(std::fabs((ratio - expect).to_double()) < 1e-12);
    }
}

TEST_CASE("small-tau periodic codings sit near the almost-sure constants") {
    RhoParams p = third();
    // the orbit visits a deep cylinder, so tau is positive but tiny and the
    // densities approach (d_*, 2 d_*) from inside
    EpSeq d = EpSeq::parse("(000010001)");
    Rational tau = tau_exact(d, p);
    CHECK(tau > Rational(0));
    CHECK(tau < Rational(1, 100));
    DensityValue v = density_pair(CantorPoint(d, p), p);
    CHECK_FALSE(v.endpoint_case);
    CHECK(v.lower.to_double() == doctest::Approx(d_star_lower(p).to_double()).epsilon(0.01));
    CHECK(v.upper.to_double() == doctest::Approx(d_star_upper(p).to_double()).epsilon(0.01));
}

TEST_CASE("density pair composition") {
    RhoParams p = third();
    DensityValue at_zero = density_pair(CantorPoint(EpSeq::zeros(), p), p);
    CHECK(at_zero.endpoint_case);
    CHECK(at_zero.lower.to_double() == doctest::Approx(0.41700612892108).epsilon(1e-10));
    CHECK(at_zero.upper.to_double() == doctest::Approx(std::pow(2.0, -p.s_double())).epsilon(1e-12));
    DensityValue at_tg = density_pair(CantorPoint(EpSeq::parse("(01)"), p), p);
    CHECK_FALSE(at_tg.endpoint_case);
    CHECK(at_tg.lower.to_double() == doctest::Approx(0.5609550).epsilon(1e-6));
}

TEST_CASE("ball measure exact values") {
    RhoParams p = third();
    auto b1 = ball_measure(Rational(0), Rational(1, 3), p, 10);
    CHECK(b1.lo == Rational(1, 2));
    CHECK(b1.hi == Rational(1, 2));
    auto b2 = ball_measure(Rational(1, 2), Rational(1, 2), p, 10);
    CHECK(b2.lo == Rational(1));
    CHECK(b2.hi == Rational(1));
    auto b3 = ball_measure(Rational(0), Rational(1, 9), p, 10);
    CHECK(b3.lo == Rational(1, 4));
    CHECK(b3.hi == Rational(1, 4));
    CHECK_THROWS_AS(ball_measure(Rational(0), Rational(0), p, 10), invalid_input);
    CHECK_THROWS_AS(ball_measure(Rational(0), Rational(1, 9), p, 0), invalid_input);
}

TEST_CASE("ball measure enclosure width bound") {
    RhoParams p = third();
    for (int depth : {8, 12, 16}) {
        auto enc = ball_measure(Rational(1, 4), Rational(1, 10), p, depth);
        Rational gap = enc.hi - enc.lo;
        CHECK(gap <= Rational(BigInt(2), BigInt(1) << (depth - 1)));  // 2 boundary cylinders
        CHECK(enc.lo <= enc.hi);
    }
}

TEST_CASE("empirical density sandwich at five periodic points") {
    RhoParams p = third();
    for (const char* text :
         {"(001)", "(01)", "(0010111)", "(00101101)", "(0001011)"}) {
        CantorPoint x(EpSeq::parse(text), p);
        DensityValue d = density_pair(x, p);
        auto [mn, mx] = ratio_scan(x.value, p);
        double lo = d.lower.to_double(), hi = d.upper.to_double();
        CHECK(mn >= lo * 0.999);  // enclosure can only overshoot the liminf
        CHECK(mn <= lo * 1.05);
        CHECK(mx <= hi * 1.001);
        CHECK(mx >= hi * 0.95);
    }
}

TEST_CASE("uniform bounds a r^s <= mu(B) <= b r^s on the sampled grid") {
    RhoParams p = third();
    double s = p.s_double();
    double a = 1e18, b = 0;
    std::vector<std::pair<Rational, Rational>> samples;
    for (int k = 2; k <= 10; ++k) {
        for (int j : {24, 17, 12, 9}) {
            Rational r = p.rho().pow(k) * Rational(j, 24);
            auto enc = ball_measure(Rational(1, 4), r, p, k + 14);
            samples.push_back({r, enc.lo});
            double rs = std::pow(r.to_double(), s);
            a = std::min(a, enc.lo.to_double() / rs);
            b = std::max(b, enc.hi.to_double() / rs);
        }
    }
    CHECK(a > 0);
    CHECK(b < 1e6);
    CHECK(a <= b);
    for (auto& [r, lo] : samples) {
        double rs = std::pow(r.to_double(), s);
        CHECK(lo.to_double() >= a * rs * (1 - 1e-9));
        CHECK(lo.to_double() <= b * rs * (1 + 1e-9));
    }
}

TEST_CASE("formula constants agree with the measure-side scan") {
    RhoParams p = third();
    // liminf side at x = 0: radii just inside the pre-gap scale
    double s = p.s_double();
    double mn = 1e18, mx = 0;
    for (int k = 4; k <= 14; ++k) {
        for (Rational r : {p.rho().pow(k),
                           p.rho().pow(k - 1) * (Rational(1) - p.rho()) * Rational(1023, 1024)}) {
            auto enc = ball_measure(Rational(0), r, p, k + 16);
            double denom = std::pow(2 * r.to_double(), s);
            mn = std::min(mn, enc.lo.to_double() / denom);
            mx = std::max(mx, enc.hi.to_double() / denom);
        }
    }
    CHECK(mn == doctest::Approx(d_star_lower(p).to_double()).epsilon(0.02));
    CHECK(mx == doctest::Approx(std::pow(2.0, -s)).epsilon(0.02));
}
