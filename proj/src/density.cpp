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

#include "cantor/density.hpp"

namespace cantor {

namespace {

Decimal pow_decimal(const Rational& base, const Decimal& expo, int scale) {
    return Decimal::pow(Decimal::from_rational(base, scale), expo);
}

} // namespace

Decimal lower_density_from_tau(const Rational& tau, const RhoParams& p) {
    const Rational& rho = p.rho();
    Rational tau_max = rho / (Rational(1) + rho);
    if (tau < Rational(0) || tau > tau_max)
        throw invalid_input("tau outside [0, rho/(1+rho)]");
    int ws = p.work_scale();
    Decimal one = Decimal::from_int(1, ws);
    Decimal s = p.s();
    Decimal two_pow = Decimal::exp((one + s) * Decimal::ln2(ws));  // 2^(1+s)
    Decimal base = pow_decimal(Rational(1) - rho - tau, s, ws);
    return one / (two_pow * base);
}

UpperDensity upper_density_from_coding(const EpSeq& coding, const RhoParams& p) {
    int ws = p.work_scale();
    Decimal one = Decimal::from_int(1, ws);
    Decimal s = p.s();
    const BinaryWord& per = coding.period();
    if (per.size() == 1) {
        // Eventually constant coding: T^n x reaches an endpoint.
        return {one / Decimal::exp(s * Decimal::ln2(ws)), true};
    }
    Rational tau = tau_exact(coding, p);
    const Rational& rho = p.rho();
    Decimal two_pow = Decimal::exp(s * Decimal::ln2(ws));  // 2^s
    Decimal base = pow_decimal(Rational(1) - rho + rho * tau, s, ws);
    return {one / (two_pow * base), false};
}

DensityValue density_pair(const CantorPoint& x, const RhoParams& p) {
    Rational tau = tau_exact(x.coding, p);
    auto up = upper_density_from_coding(x.coding, p);
    return {lower_density_from_tau(tau, p), up.value, up.endpoint_case};
}

Decimal d_star_lower(const RhoParams& p) { return lower_density_from_tau(Rational(0), p); }

Decimal d_star_upper(const RhoParams& p) {
    // Generic-branch upper density at tau = 0, computed on its own route so
    // the factor-two law can be checked rather than assumed.
    int ws = p.work_scale();
    Decimal one = Decimal::from_int(1, ws);
    Decimal two_pow = Decimal::exp(p.s() * Decimal::ln2(ws));  // 2^s
    Decimal base = pow_decimal(Rational(1) - p.rho(), p.s(), ws);
    return one / (two_pow * base);
}

namespace {

// Accumulates the enclosure over cylinders [a, a + rho^level].
void ball_recurse(const Rational& a, unsigned level, const Rational& lo_edge,
                  const Rational& hi_edge, const RhoParams& p, int depth, Rational& mass_lo,
                  Rational& mass_hi, const Rational& cyl_len, Rational cyl_mass) {
    Rational b = a + cyl_len;
    if (b < lo_edge || a > hi_edge) return;                 // disjoint
    if (a >= lo_edge && b <= hi_edge) {                     // contained
        mass_lo += cyl_mass;
        mass_hi += cyl_mass;
        return;
    }
    if (static_cast<int>(level) == depth) {                 // boundary leaf
        mass_hi += cyl_mass;
        return;
    }
    Rational child_len = cyl_len * p.rho();
    Rational child_mass = cyl_mass / Rational(2);
    ball_recurse(a, level + 1, lo_edge, hi_edge, p, depth, mass_lo, mass_hi, child_len,
                 child_mass);
    ball_recurse(b - child_len, level + 1, lo_edge, hi_edge, p, depth, mass_lo, mass_hi,
                 child_len, child_mass);
}

} // namespace

MeasureEnclosure ball_measure(const Rational& x, const Rational& r, const RhoParams& p,
                              int depth) {
    if (r.sign() <= 0) throw invalid_input("ball_measure requires r > 0");
    if (depth < 1) throw invalid_input("ball_measure requires depth >= 1");
    Rational lo_edge = x - r, hi_edge = x + r;
    Rational mass_lo(0), mass_hi(0);
    ball_recurse(Rational(0), 0, lo_edge, hi_edge, p, depth, mass_lo, mass_hi, Rational(1),
                 Rational(1));
    return {mass_lo, mass_hi};
}

} // namespace cantor
