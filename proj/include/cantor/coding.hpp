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

#include <optional>
#include <utility>
#include <vector>

#include "cantor/decimal.hpp"
#include "cantor/rational.hpp"
#include "cantor/words.hpp"

namespace cantor {

/// Contraction ratio and precision budget for everything downstream.
/// rho must be an exact rational in (0, 1/3]; s = log 2 / (-log rho) is the
/// similarity dimension of the attractor.
class RhoParams {
public:
    static RhoParams make(const Rational& rho, int precision = 50);

    const Rational& rho() const { return rho_; }
    int precision() const { return precision_; }
    int work_scale() const { return precision_ + 10; }

    const Decimal& s() const { return s_; }
    double s_double() const { return s_double_; }
    double neg_log_rho() const { return neg_log_rho_; }

private:
    RhoParams() = default;
    Rational rho_;
    int precision_ = 50;
    Decimal s_;
    double s_double_ = 0;
    double neg_log_rho_ = 0;
};

/// A point of the Cantor set carried as exact coding + exact value, the two
/// linked by the digit series x = (1-rho) * sum d_i rho^(i-1).
struct CantorPoint {
    EpSeq coding;
    Rational value;

    CantorPoint(EpSeq c, const RhoParams& p);
    CantorPoint(EpSeq c, Rational v, const RhoParams& p);  // verifies v == pi(c)
};

enum class GammaKind { NotInGamma, IsolatedInGamma, AccumulationInGamma };

struct GammaClassification {
    GammaKind kind = GammaKind::NotInGamma;
    std::optional<size_t> witness;  // shift index n with sigma^n(delta) == reflect(delta)
};

/// Value of the coding map.
Rational pi(const EpSeq& coding, const RhoParams& p);

/// Unique coding of x in C; throws not_in_cantor_set when x hits a gap.
EpSeq pi_inverse(const Rational& x, const RhoParams& p);

/// Coding of the smallest Cantor point >= t, for t in [0,1].
EpSeq delta(const Rational& t, const RhoParams& p);

/// Expanding two-branch map on [0,rho] u [1-rho,1].
Rational T_map(const Rational& x, const RhoParams& p);

/// Exact tau for an eventually periodic coding: the min of pi over one
/// period of shifts past the preperiod, for the coding and its reflection.
Rational tau_exact(const EpSeq& coding, const RhoParams& p);

struct TauEstimate {
    Rational value;
    bool certified = false;  // always false: running-min estimate only
};

/// Orbit-sampling estimate of tau at x in C; validation oracle for tau_exact.
TauEstimate tau_numeric(const Rational& x, const RhoParams& p, size_t n_iters);

/// Membership in the density spectrum: delta <= sigma^n(delta) <= reflect(delta)
/// over all distinct shifts.
bool in_gamma(const EpSeq& coding, const RhoParams& p);

GammaClassification classify_gamma(const EpSeq& coding, const RhoParams& p);

/// All purely periodic spectrum members with primitive period <= max_period,
/// classified and sorted by value. Guard: max_period <= 24.
std::vector<std::pair<CantorPoint, GammaClassification>>
enumerate_gamma_periodic(size_t max_period, const RhoParams& p);

} // namespace cantor
