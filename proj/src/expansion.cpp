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

#include "cantor/expansion.hpp"

#include <cmath>
#include <map>

namespace cantor {

namespace {

// sum_{i=1..n} d_i u^i for u = 1/q, as an exact rational.
Rational eval_digits(const std::vector<uint8_t>& d, const Rational& q) {
    Rational u = Rational(1) / q;
    Rational acc(0);
    for (size_t i = d.size(); i-- > 0;) {
        acc = acc * u;
        if (d[i]) acc += u;
    }
    return acc;
}

// Exact value of (alpha)_q for eventually periodic alpha.
Rational eval_alpha(const EpSeq& alpha, const Rational& q) {
    const BinaryWord& pre = alpha.preperiod();
    const BinaryWord& per = alpha.period();
    Rational u = Rational(1) / q;
    Rational head = eval_digits(pre.digits(), q);
    Rational per_val = eval_digits(per.digits(), q);
    Rational u_p = u.pow(static_cast<unsigned long>(pre.size()));
    Rational u_k = u.pow(static_cast<unsigned long>(per.size()));
    return head + u_p * per_val / (Rational(1) - u_k);
}

double eval_alpha_double(const EpSeq& alpha, double q) {
    double u = 1.0 / q;
    double acc = 0, pw = 1;
    for (size_t i = 1; i <= 200; ++i) {
        pw *= u;
        if (alpha.digit(i - 1)) acc += pw;
    }
    return acc;
}

// Quasi-greedy self-consistency: alpha is the expansion of 1 in some base
// q in (1,2] iff it starts with 1, does not end in 0^inf, and every shift
// is <= alpha.
bool is_quasi_greedy_sequence(const EpSeq& alpha) {
    if (alpha.digit(0) != 1) return false;
    if (alpha.period().size() == 1 && alpha.period()[0] == 0) return false;
    size_t span = alpha.preperiod().size() + alpha.period().size();
    for (size_t n = 1; n <= span; ++n)
        if (compare_lex(alpha.shifted(n), alpha) > 0) return false;
    return true;
}

} // namespace

BaseQ quasi_greedy_alpha(const Decimal& q, size_t n, int precision) {
    if (n < 1) throw invalid_input("quasi_greedy_alpha requires n >= 1");
    size_t cap = std::max<size_t>(n, 64) + 8;
    // The remainder error grows by a factor q <= 2 per digit; pad the working
    // scale by one digit per step so the zero threshold stays meaningful.
    int ws = precision + 10 + static_cast<int>(cap);
    Decimal qq = q.rescaled(ws);
    Decimal one = Decimal::from_int(1, ws);
    Decimal two = Decimal::from_int(2, ws);
    if (!(qq > one && qq <= two)) throw invalid_input("quasi_greedy_alpha requires q in (1,2]");

    // Threshold for treating a greedy remainder as exactly zero.
    BigInt zero_eps;
    mpz_ui_pow_ui(zero_eps.get_mpz_t(), 10, static_cast<unsigned long>(ws - (precision - 10)));
    Decimal threshold(zero_eps, ws);

    BaseQ out;
    out.q = qq.rescaled(precision + 10);
    out.q_double = qq.to_double();

    BinaryWord digits;
    Decimal r = one;
    std::map<BigInt, size_t> states;  // exact remainder -> step
    for (size_t i = 0; i < cap; ++i) {
        auto [it, fresh] = states.emplace(r.mantissa(), i);
        if (!fresh) {
            size_t first = it->second;
            out.alpha_ep = EpSeq(digits.sub(0, first), digits.sub(first, i - first));
            break;
        }
        r = qq * r;
        uint8_t d = r >= one ? 1 : 0;
        if (d) r = r - one;
        digits.push_back(d);
        if (r.abs() < threshold) {
            // Finite greedy expansion a_1..a_m with a_m = 1: the quasi-greedy
            // expansion is (a_1..a_m^-)^inf.
            if (digits[digits.size() - 1] != 1)
                throw invalid_input("greedy remainder vanished after digit 0");
            out.alpha_ep = EpSeq({}, digits.minus_form());
            break;
        }
    }
    if (out.alpha_ep) {
        out.alpha_prefix = out.alpha_ep->prefix(n);
    } else {
        while (digits.size() < n) {
            r = qq * r;
            uint8_t d = r >= one ? 1 : 0;
            if (d) r = r - one;
            digits.push_back(d);
        }
        out.alpha_prefix = digits.sub(0, n);
    }
    return out;
}

BaseQ solve_base_for_alpha(const EpSeq& alpha, int precision) {
    if (!is_quasi_greedy_sequence(alpha))
        throw not_quasi_greedy("sequence fails the quasi-greedy shift conditions: " + alpha.str());

    // Double-precision seed bracket.
    double lo_d = 1.0 + 1e-9, hi_d = 2.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo_d + hi_d);
        if (eval_alpha_double(alpha, mid) > 1.0)
            lo_d = mid;  // value too large -> base too small
        else
            hi_d = mid;
    }
    Rational lo = Rational::parse("1") + Rational(1, 1000000000);
    Rational hi = Rational(2);
    { // widen the double bracket defensively
        Rational cand_lo = Rational::parse(std::to_string(lo_d)) - Rational(1, 10000000);
        Rational cand_hi = Rational::parse(std::to_string(hi_d)) + Rational(1, 10000000);
        if (cand_lo > lo) lo = cand_lo;
        if (cand_hi < hi) hi = cand_hi;
    }
    auto sign_at = [&](const Rational& q) { return (eval_alpha(alpha, q) - Rational(1)).sign(); };
    // f decreasing in q: need f(lo) >= 1 >= f(hi).
    if (sign_at(lo) < 0 || sign_at(hi) > 0) {
        lo = Rational(1) + Rational(1, 1000000000);
        hi = Rational(2);
        if (sign_at(lo) < 0 || sign_at(hi) > 0)
            throw not_quasi_greedy("no base in (1,2] solves (alpha)_q = 1");
    }

    // Certified bisection to width 10^-(precision-5): fine enough that the
    // verification pass below sees the greedy remainder vanish for periodic
    // expansions of moderate length.
    Rational width_target(BigInt(1), [&] {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(precision - 5));
        return t;
    }());
    while (hi - lo > width_target) {
        Rational mid = (lo + hi) / Rational(2);
        int s = sign_at(mid);
        if (s == 0) {
            lo = mid;
            hi = mid;
            break;
        }
        (s > 0 ? lo : hi) = mid;
    }

    int ws = precision + 10;
    BaseQ out;
    out.q = Decimal::from_rational((lo + hi) / Rational(2), ws);
    out.q_double = out.q.to_double();
    out.alpha_ep = alpha;
    out.alpha_prefix = alpha.prefix(64);
    out.q_lo = lo;
    out.q_hi = hi;

    // Post-hoc verification: the quasi-greedy digits of the solved base must
    // reproduce alpha.
    BaseQ check = quasi_greedy_alpha(out.q, 64, precision);
    if (!(check.alpha_prefix == out.alpha_prefix))
        throw not_quasi_greedy("solved base does not reproduce alpha: " + alpha.str());
    return out;
}

BaseQ komornik_loreti_base(int precision, size_t prefix_digits) {
    size_t n = prefix_digits;
    BinaryWord tm = thue_morse_prefix(n + 1);
    std::vector<uint8_t> tail(tm.digits().begin() + 1, tm.digits().end());  // tau_1..tau_n

    // Integer sign tests for the prefix bounds of (tau_1 tau_2...)_q at
    // q = A/B:  f_lo > 1  <=>  V > A^n,  f_hi < 1  <=>  V(A-B) + B^(n+1) < A^n (A-B),
    // where V = sum tau_i B^i A^(n-i).
    auto bounds_cmp = [&](const Rational& q, bool& above, bool& below) {
        const BigInt& A = q.num();
        const BigInt& B = q.den();
        std::vector<BigInt> apow(n + 2), bpow(n + 2);
        apow[0] = 1;
        bpow[0] = 1;
        for (size_t i = 1; i <= n + 1; ++i) {
            apow[i] = apow[i - 1] * A;
            bpow[i] = bpow[i - 1] * B;
        }
        BigInt V = 0;
        for (size_t i = 1; i <= n; ++i)
            if (tail[i - 1]) V += bpow[i] * apow[n - i];
        BigInt amb = A - B;
        above = V > apow[n];                                   // even all-zero tail exceeds 1
        below = V * amb + bpow[n + 1] < apow[n] * amb;         // even all-one tail stays below 1
    };

    Rational lo(17, 10), hi(19, 10);
    {
        bool a, b;
        bounds_cmp(lo, a, b);
        if (!a) lo = Rational(3, 2);
        bounds_cmp(hi, a, b);
        if (!b) hi = Rational(2);
    }
    Rational width_target(BigInt(1), [] {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, 14);
        return t;
    }());
    while (hi - lo > width_target) {
        Rational mid = (lo + hi) / Rational(2);
        bool above = false, below = false;
        bounds_cmp(mid, above, below);
        if (above)
            lo = mid;
        else if (below)
            hi = mid;
        else
            throw resource_limit("Komornik-Loreti prefix bounds too coarse for the bisection");
    }

    int ws = precision + 10;
    BaseQ out;
    out.q = Decimal::from_rational((lo + hi) / Rational(2), ws);
    out.q_double = out.q.to_double();
    out.alpha_prefix = BinaryWord(std::vector<uint8_t>(tail.begin(), tail.begin() + std::min<size_t>(64, n)));
    out.q_lo = lo;
    out.q_hi = hi;
    return out;
}

BaseQ phi_map(const EpSeq& t_coding, const RhoParams& p) {
    if (!in_gamma(t_coding, p))
        throw not_in_gamma("phi_map requires a coding in the density spectrum");
    return solve_base_for_alpha(t_coding.reflected(), p.precision());
}

Verdict in_Vq(const EpSeq& d, const BaseQ& q, size_t check_depth) {
    size_t span = d.preperiod().size() + d.period().size();
    if (q.alpha_ep) {
        const EpSeq& alpha = *q.alpha_ep;
        EpSeq bar = alpha.reflected();
        for (size_t n = 0; n < span; ++n) {
            EpSeq s = d.shifted(n);
            if (compare_lex(s, alpha) > 0) return Verdict::No;
            if (compare_lex(s, bar) < 0) return Verdict::No;
        }
        return Verdict::Yes;
    }
    if (q.alpha_prefix.size() < check_depth) check_depth = q.alpha_prefix.size();
    bool undecided = false;
    for (size_t n = 0; n < span; ++n) {
        EpSeq s = d.shifted(n);
        int cmp_hi = 0, cmp_lo = 0;
        for (size_t i = 0; i < check_depth; ++i) {
            uint8_t sd = s.digit(i), ad = q.alpha_prefix[i];
            if (cmp_hi == 0 && sd != ad) cmp_hi = sd < ad ? -1 : 1;
            if (cmp_lo == 0 && sd != 1 - ad) cmp_lo = sd < 1 - ad ? -1 : 1;
            if (cmp_hi != 0 && cmp_lo != 0) break;
        }
        if (cmp_hi > 0 || cmp_lo < 0) return Verdict::No;
        if (cmp_hi == 0 || cmp_lo == 0) undecided = true;
    }
    return undecided ? Verdict::Undecided : Verdict::Yes;
}

BinaryWord delta_t_kl_prefix(size_t n) {
    BinaryWord tm = thue_morse_prefix(n + 1);
    std::vector<uint8_t> tail(tm.digits().begin() + 1, tm.digits().end());
    return BinaryWord(std::move(tail)).reflected();
}

std::pair<Rational, Rational> t_kl_bounds(const RhoParams& p, size_t prefix_digits) {
    BinaryWord w = delta_t_kl_prefix(prefix_digits);
    Rational lo = pi(EpSeq(w, BinaryWord::parse("0")), p);
    Rational hi = pi(EpSeq(w, BinaryWord::parse("1")), p);
    return {lo, hi};
}

} // namespace cantor
