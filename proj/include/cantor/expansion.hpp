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

#include "cantor/coding.hpp"

namespace cantor {

/// A base q in (1,2] together with its quasi-greedy expansion of 1: a cached
/// digit prefix always, and the exact eventually periodic form when known.
struct BaseQ {
    Decimal q;
    double q_double = 0;
    BinaryWord alpha_prefix;
    std::optional<EpSeq> alpha_ep;
    // Certified rational bracket around q when produced by a solver.
    std::optional<Rational> q_lo, q_hi;
};

/// First n digits of the quasi-greedy expansion of 1 in base q (1 < q <= 2).
/// If the greedy remainder vanishes (within 10^-(precision-10)) at step m,
/// the expansion is (a_1..a_m^-)^inf and alpha_ep is set; alpha_ep is also
/// set when the remainder state repeats exactly.
BaseQ quasi_greedy_alpha(const Decimal& q, size_t n, int precision);

/// The unique q in (1,2] with (alpha)_q = 1 for an eventually periodic alpha,
/// via certified rational bisection (Decimal-Newton accelerated). Verifies
/// post hoc that quasi_greedy_alpha(q) reproduces alpha; throws
/// not_quasi_greedy otherwise.
BaseQ solve_base_for_alpha(const EpSeq& alpha, int precision = 50);

/// The Komornik-Loreti base: unique root of (tau_1 tau_2 ...)_q = 1, by
/// bisection on two-sided prefix bounds. Returns a certified bracket.
BaseQ komornik_loreti_base(int precision = 50, size_t prefix_digits = 96);

/// t-to-base dictionary q(t) defined by alpha(q(t)) = reflect(delta(t));
/// requires the coding to be in the spectrum (throws not_in_gamma).
BaseQ phi_map(const EpSeq& t_coding, const RhoParams& p);

enum class Verdict { Yes, No, Undecided };

/// Sandwich test reflect(alpha) <= sigma^n(d) <= alpha over all distinct
/// shifts of d. Exact when alpha_ep is present; otherwise decided within
/// check_depth digits with Undecided on ties.
Verdict in_Vq(const EpSeq& d, const BaseQ& q, size_t check_depth);

/// Value bounds of t_KL = pi(reflect(tau_1 tau_2 ...)) from an n-digit
/// prefix: exact rationals with hi - lo <= rho^n.
std::pair<Rational, Rational> t_kl_bounds(const RhoParams& p, size_t prefix_digits);

/// Coding prefix of delta(t_KL) = reflect(tau_1 tau_2 ...).
BinaryWord delta_t_kl_prefix(size_t n);

} // namespace cantor
