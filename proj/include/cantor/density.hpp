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

#include "cantor/coding.hpp"

namespace cantor {

/// Pointwise lower/upper s-densities at a point, evaluated to the precision
/// budget. endpoint_case marks codings that are eventually constant, where
/// the upper density takes the value 2^-s.
struct DensityValue {
    Decimal lower;
    Decimal upper;
    bool endpoint_case = false;
};

/// 1 / (2^(1+s) (1 - rho - tau)^s); strictly increasing in tau.
/// tau must lie in [0, rho/(1+rho)].
Decimal lower_density_from_tau(const Rational& tau, const RhoParams& p);

struct UpperDensity {
    Decimal value;
    bool endpoint_case = false;
};

/// 2^-s on eventually constant codings, else 1 / (2^s (1 - rho + rho*tau)^s).
UpperDensity upper_density_from_coding(const EpSeq& coding, const RhoParams& p);

DensityValue density_pair(const CantorPoint& x, const RhoParams& p);

/// Almost-sure density constants (tau = 0 case).
Decimal d_star_lower(const RhoParams& p);
Decimal d_star_upper(const RhoParams& p);

struct MeasureEnclosure {
    Rational lo;
    Rational hi;
};

/// Rigorous enclosure of mu(closed ball [x-r, x+r]) by descending the
/// self-similar cylinder tree to `depth`; the gap is at most 2^(1-depth).
MeasureEnclosure ball_measure(const Rational& x, const Rational& r, const RhoParams& p,
                              int depth);

} // namespace cantor
