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

#include "cantor/coding.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cantor {

namespace {

constexpr size_t kOrbitBudget = 1u << 20;

// Digits of the orbit of t under the two-branch digit extraction. Returns
// the canonical EpSeq; `allow_gap` selects delta() semantics (gap -> right
// endpoint coding) over pi_inverse() semantics (gap -> error).
EpSeq extract_digits(Rational t, const RhoParams& p, bool allow_gap) {
    const Rational& rho = p.rho();
    const Rational one(1);
    const Rational one_minus_rho = one - rho;
    std::vector<uint8_t> digits;
    std::map<Rational, size_t> seen;
    for (size_t step = 0;; ++step) {
        if (step > kOrbitBudget)
            throw resource_limit("digit orbit did not repeat within budget");
        if (t.sign() <= 0) {
            // Tail is 0^inf from here.
            return EpSeq(BinaryWord(std::move(digits)), BinaryWord::parse("0"));
        }
        auto [it, fresh] = seen.emplace(t, step);
        if (!fresh) {
            size_t first = it->second;
            BinaryWord pre(std::vector<uint8_t>(digits.begin(), digits.begin() + first));
            BinaryWord per(std::vector<uint8_t>(digits.begin() + first, digits.end()));
            return EpSeq(std::move(pre), std::move(per));
        }
        if (t <= rho) {
            digits.push_back(0);
            t = t / rho;
        } else if (t < one_minus_rho) {
            if (!allow_gap) throw not_in_cantor_set(static_cast<int>(step));
            // Smallest Cantor point >= t is 1-rho: digit 1 then zeros.
            digits.push_back(1);
            return EpSeq(BinaryWord(std::move(digits)), BinaryWord::parse("0"));
        } else if (t <= one) {
            digits.push_back(1);
            t = (t - one_minus_rho) / rho;
        } else {
            throw invalid_input("digit extraction left [0,1]");
        }
    }
}

} // namespace

RhoParams RhoParams::make(const Rational& rho, int precision) {
    if (!(rho > Rational(0) && rho <= Rational(1, 3)))
        throw invalid_input("rho must lie in (0, 1/3]");
    if (precision < 20) throw invalid_input("precision must be >= 20");
    RhoParams p;
    p.rho_ = rho;
    p.precision_ = precision;
    int ws = p.work_scale();
    Decimal rho_d = Decimal::from_rational(rho, ws);
    Decimal ln_rho = Decimal::ln(rho_d);
    p.s_ = Decimal::ln2(ws) / (-ln_rho);
    p.s_double_ = p.s_.to_double();
    p.neg_log_rho_ = -std::log(rho.to_double());
    double s_max = std::log(2.0) / std::log(3.0);
    if (p.s_double_ > s_max + 1e-12) throw invalid_input("dimension s exceeds log2/log3");
    return p;
}

CantorPoint::CantorPoint(EpSeq c, const RhoParams& p) : coding(std::move(c)) {
    value = pi(coding, p);
}

CantorPoint::CantorPoint(EpSeq c, Rational v, const RhoParams& p) : coding(std::move(c)) {
    value = pi(coding, p);
    if (!(value == v))
        throw invalid_input("CantorPoint value does not match its coding");
}

Rational pi(const EpSeq& coding, const RhoParams& p) {
    const Rational& rho = p.rho();
    const BinaryWord& pre = coding.preperiod();
    const BinaryWord& per = coding.period();
    // sum over preperiod: d_i rho^i (0-based)
    Rational acc(0), power(1);
    for (size_t i = 0; i < pre.size(); ++i) {
        if (pre[i]) acc += power;
        power *= rho;
    }
    // periodic part: rho^p * (sum e_j rho^j) / (1 - rho^k)
    Rational per_sum(0), q(1);
    for (size_t j = 0; j < per.size(); ++j) {
        if (per[j]) per_sum += q;
        q *= rho;
    }
    Rational rho_k = rho.pow(static_cast<unsigned long>(per.size()));
    acc += power * per_sum / (Rational(1) - rho_k);
    return (Rational(1) - rho) * acc;
}

EpSeq pi_inverse(const Rational& x, const RhoParams& p) {
    if (x < Rational(0) || x > Rational(1)) throw invalid_input("pi_inverse requires x in [0,1]");
    return extract_digits(x, p, /*allow_gap=*/false);
}

EpSeq delta(const Rational& t, const RhoParams& p) {
    if (t > Rational(1)) throw invalid_input("delta requires t <= 1");
    if (t.sign() < 0) throw invalid_input("delta requires t >= 0");
    return extract_digits(t, p, /*allow_gap=*/true);
}

Rational T_map(const Rational& x, const RhoParams& p) {
    const Rational& rho = p.rho();
    if (x >= Rational(0) && x <= rho) return x / rho;
    Rational one_minus_rho = Rational(1) - rho;
    if (x >= one_minus_rho && x <= Rational(1)) return (x - one_minus_rho) / rho;
    throw outside_domain("T is undefined on the open middle gap");
}

Rational tau_exact(const EpSeq& coding, const RhoParams& p) {
    auto orbit_min = [&](const EpSeq& d) {
        size_t start = d.preperiod().size();
        size_t k = d.period().size();
        Rational best = pi(d.shifted(start), p);
        for (size_t n = 1; n < k; ++n) {
            Rational v = pi(d.shifted(start + n), p);
            if (v < best) best = v;
        }
        return best;
    };
    Rational a = orbit_min(coding);
    Rational b = orbit_min(coding.reflected());
    return a < b ? a : b;
}

TauEstimate tau_numeric(const Rational& x, const RhoParams& p, size_t n_iters) {
    if (n_iters < 1) throw invalid_input("tau_numeric requires n_iters >= 1");
    size_t burn_in = n_iters / 2;
    Rational u = x, v = Rational(1) - x;
    std::optional<Rational> best;
    for (size_t i = 1; i <= n_iters; ++i) {
        try {
            u = T_map(u, p);
            v = T_map(v, p);
        } catch (const outside_domain&) {
            throw std::logic_error("orbit of a Cantor point left the domain of T");
        }
        if (i < burn_in) continue;
        const Rational& m = u < v ? u : v;
        if (!best || m < *best) best = m;
    }
    return TauEstimate{*best, false};
}

bool in_gamma(const EpSeq& coding, const RhoParams&) {
    EpSeq bar = coding.reflected();
    size_t span = coding.preperiod().size() + coding.period().size();
    for (size_t n = 0; n < span; ++n) {
        EpSeq s = coding.shifted(n);
        if (compare_lex(s, coding) < 0) return false;
        if (compare_lex(s, bar) > 0) return false;
    }
    return true;
}

GammaClassification classify_gamma(const EpSeq& coding, const RhoParams& p) {
    if (!in_gamma(coding, p)) return {GammaKind::NotInGamma, std::nullopt};
    EpSeq bar = coding.reflected();
    size_t span = coding.preperiod().size() + coding.period().size();
    for (size_t n = 1; n <= span; ++n) {
        if (coding.shifted(n) == bar) return {GammaKind::IsolatedInGamma, n};
    }
    return {GammaKind::AccumulationInGamma, std::nullopt};
}

std::vector<std::pair<CantorPoint, GammaClassification>>
enumerate_gamma_periodic(size_t max_period, const RhoParams& p) {
    if (max_period > 24) throw resource_limit("enumerate_gamma_periodic guard: max_period <= 24");
    std::vector<std::pair<CantorPoint, GammaClassification>> out;
    for (size_t len = 1; len <= max_period; ++len) {
        for (uint64_t code = 0; code < (uint64_t(1) << len); ++code) {
            // Members start with 0 (the sequence must not exceed its own
            // reflection), so the top bit prunes half the space.
            if (len > 0 && (code >> (len - 1)) & 1) continue;
            std::vector<uint8_t> d(len);
            for (size_t i = 0; i < len; ++i) d[i] = (code >> (len - 1 - i)) & 1;
            BinaryWord w{std::move(d)};
            if (w.primitive_root_length() != len) continue;
            EpSeq seq({}, w);
            auto cls = classify_gamma(seq, p);
            if (cls.kind == GammaKind::NotInGamma) continue;
            out.emplace_back(CantorPoint(seq, p), cls);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.value < b.first.value; });
    return out;
}

} // namespace cantor
