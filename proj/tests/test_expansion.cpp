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

#include "cantor/dimension.hpp"
#include "cantor/expansion.hpp"

using namespace cantor;

namespace {

RhoParams third() { return RhoParams::make(Rational(1, 3)); }

constexpr double kGolden = 1.6180339887498948482;

// Test-local series evaluation: sum alpha_i q^-i over `terms` digits.
Decimal alpha_series(const EpSeq& alpha, const Decimal& q, size_t terms) {
    int S = q.scale();
    Decimal one = Decimal::from_int(1, S);
    Decimal u = one / q;
    Decimal pw = one, acc = Decimal::from_int(0, S);
    for (size_t i = 1; i <= terms; ++i) {
        pw = pw * u;
        if (alpha.digit(i - 1)) acc = acc + pw;
    }
    return acc;
}

std::vector<BinaryWord> admissible_words(size_t max_len, size_t limit) {
    std::vector<BinaryWord> out;
    for (size_t len = 2; len <= max_len && out.size() < limit; ++len) {
        for (uint64_t code = 0; code < (uint64_t(1) << len) && out.size() < limit; ++code) {
            std::vector<uint8_t> d(len);
            for (size_t i = 0; i < len; ++i) d[i] = (code >> (len - 1 - i)) & 1;
            BinaryWord w(std::move(d));
            if (is_admissible(w)) out.push_back(w);
        }
    }
    return out;
}

} // namespace

TEST_CASE("quasi-greedy digits at the golden base") {
    // golden ratio to 70 digits; the integer sqrt truncates, so this sits an
    // epsilon below the root and the expansion runs (10)-periodic digits
    Decimal five = Decimal::from_int(5, 70);
    Decimal golden = (Decimal::sqrt(five) + Decimal::from_int(1, 70)) / Decimal::from_int(2, 70);
    BaseQ below = quasi_greedy_alpha(golden, 16, 50);
    CHECK(below.alpha_prefix.str() == "1010101010101010");
    // an epsilon above the root, the greedy remainder vanishes at step 2 and
    // the eventually periodic form is detected
    Decimal above = golden + Decimal(BigInt(10000000000L), 70);  // +1e-60
    BaseQ b = quasi_greedy_alpha(above, 16, 50);
    CHECK(b.alpha_prefix.str() == "1010101010101010");
    REQUIRE(b.alpha_ep.has_value());
    CHECK(*b.alpha_ep == EpSeq::parse("(10)"));
}

TEST_CASE("quasi-greedy digits at q = 2") {
    BaseQ b = quasi_greedy_alpha(Decimal::from_int(2, 60), 8, 50);
    CHECK(b.alpha_prefix.str() == "11111111");
    REQUIRE(b.alpha_ep.has_value());
    CHECK(*b.alpha_ep == EpSeq::ones());
}

TEST_CASE("quasi-greedy digits near the Komornik-Loreti base follow Thue-Morse") {
    BaseQ kl = komornik_loreti_base(50, 96);
    BaseQ b = quasi_greedy_alpha(kl.q, 20, 50);
    BinaryWord tm = thue_morse_prefix(21);
    BinaryWord tail(std::vector<uint8_t>(tm.digits().begin() + 1, tm.digits().end()));
    CHECK(b.alpha_prefix == tail);
}

TEST_CASE("quasi-greedy input validation") {
    CHECK_THROWS_AS(quasi_greedy_alpha(Decimal::from_int(1, 60), 8, 50), invalid_input);
    CHECK_THROWS_AS(quasi_greedy_alpha(Decimal::from_int(3, 60), 8, 50), invalid_input);
}

TEST_CASE("base solver at the golden ratio and at 2") {
    BaseQ g = solve_base_for_alpha(EpSeq::parse("(10)"), 50);
    CHECK(std::fabs(g.q_double - kGolden) < 1e-12);
    REQUIRE(g.q_lo);
    REQUIRE(g.q_hi);
    CHECK((*g.q_hi - *g.q_lo) <= Rational(BigInt(1), [] {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, 45);
        return t;
    }()));
    BaseQ two = solve_base_for_alpha(EpSeq::ones(), 50);
    CHECK(std::fabs(two.q_double - 2.0) < 1e-12);
}

TEST_CASE("base solver round trip over admissible-word bases") {
    auto words = admissible_words(8, 20);
    REQUIRE(words.size() == 20);
    for (const auto& a : words) {
        EpSeq alpha({}, a);
        BaseQ b = solve_base_for_alpha(alpha, 50);
        // defining series reproduces 1 to the certification width
        Decimal sum = alpha_series(alpha, b.q.rescaled(70), 220);
        Decimal one = Decimal::from_int(1, 70);
        CHECK(std::fabs((sum - one).to_double()) < 1e-25);
        // and the quasi-greedy digits of the solved base reproduce alpha
        BaseQ check = quasi_greedy_alpha(b.q, 64, 50);
        CHECK(check.alpha_prefix == alpha.prefix(64));
    }
}

TEST_CASE("solver rejects non-quasi-greedy sequences") {
    CHECK_THROWS_AS(solve_base_for_alpha(EpSeq::parse("(011)"), 50), not_quasi_greedy);
    CHECK_THROWS_AS(solve_base_for_alpha(EpSeq::zeros(), 50), not_quasi_greedy);
    CHECK_THROWS_AS(solve_base_for_alpha(EpSeq::parse("(0)"), 50), not_quasi_greedy);
}

TEST_CASE("Komornik-Loreti base bracket") {
    BaseQ kl = komornik_loreti_base(50, 96);
    CHECK(std::fabs(kl.q_double - 1.7872316501829906) < 1e-9);
    REQUIRE(kl.q_lo);
    REQUIRE(kl.q_hi);
    CHECK(*kl.q_lo < *kl.q_hi);
    CHECK((*kl.q_hi - *kl.q_lo).to_double() < 1e-13);
}

TEST_CASE("t_KL bounds narrow with the prefix length") {
    RhoParams p = third();
    auto [lo64, hi64] = t_kl_bounds(p, 64);
    auto [lo128, hi128] = t_kl_bounds(p, 128);
    CHECK(lo64 <= lo128);
    CHECK(hi128 <= hi64);
    CHECK((hi64 - lo64) <= p.rho().pow(63));
    CHECK(lo64.to_double() == doctest::Approx(0.08518742).epsilon(1e-6));
}

TEST_CASE("phi map to bases") {
    RhoParams p = third();
    BaseQ qg = phi_map(EpSeq::parse("(01)"), p);
    CHECK(std::fabs(qg.q_double - kGolden) < 1e-12);
    BaseQ q2 = phi_map(EpSeq::zeros(), p);
    CHECK(std::fabs(q2.q_double - 2.0) < 1e-12);
    CHECK_THROWS_AS(phi_map(EpSeq::parse("(011)"), p), not_in_gamma);
}

TEST_CASE("phi map reverses the order of spectrum points") {
    RhoParams p = third();
    auto members = enumerate_gamma_periodic(9, p);
    REQUIRE(members.size() >= 20);
    double prev_q = 3.0;
    size_t used = 0;
    for (const auto& [pt, cls] : members) {
        BaseQ b = phi_map(pt.coding, p);
        CHECK(b.q_double < prev_q);
        prev_q = b.q_double;
        if (++used == 20) break;
    }
}

TEST_CASE("V_q membership with exact alpha") {
    RhoParams p = third();
    BaseQ qg = solve_base_for_alpha(EpSeq::parse("(10)"), 50);
    CHECK(in_Vq(EpSeq::parse("(10)"), qg, 64) == Verdict::Yes);
    BaseQ two = solve_base_for_alpha(EpSeq::ones(), 50);
    CHECK(in_Vq(EpSeq::ones(), two, 64) == Verdict::Yes);
    BaseQ q110 = solve_base_for_alpha(EpSeq::parse("(110)"), 50);
    CHECK(in_Vq(EpSeq::parse("(110)"), q110, 64) == Verdict::Yes);
    CHECK(in_Vq(EpSeq::parse("111(0)"), q110, 64) == Verdict::No);
}

TEST_CASE("V_q membership in prefix mode") {
    BaseQ kl = komornik_loreti_base(50, 96);
    REQUIRE_FALSE(kl.alpha_ep.has_value());
    CHECK(in_Vq(EpSeq::parse("(01)"), kl, 64) == Verdict::Yes);
    CHECK(in_Vq(EpSeq::ones(), kl, 64) == Verdict::No);
    // with a one-digit window the comparisons stay tied: undecided, never a
    // silent bool
    CHECK(in_Vq(EpSeq::parse("(01)"), kl, 1) == Verdict::Undecided);
}

TEST_CASE("block sets from delta(t) equal those from alpha(q(t))") {
    RhoParams p = third();
    auto members = enumerate_gamma_periodic(6, p);
    size_t checked = 0;
    for (const auto& [pt, cls] : members) {
        if (pt.coding == EpSeq::ones()) continue;
        BaseQ b = phi_map(pt.coding, p);
        REQUIRE(b.alpha_ep.has_value());
        SandwichSystem from_delta = SandwichSystem::from_beta(pt.coding);
        SandwichSystem from_alpha = SandwichSystem::from_beta(b.alpha_ep->reflected());
        for (size_t n = 1; n <= 12; ++n)
            CHECK(count_blocks(from_delta, n) == count_blocks(from_alpha, n));
        if (++checked == 10) break;
    }
    CHECK(checked == 10);
}

TEST_CASE("BaseQ series invariant when alpha_ep is present") {
    BaseQ g = solve_base_for_alpha(EpSeq::parse("(10)"), 50);
    REQUIRE(g.alpha_ep.has_value());
    Decimal sum = alpha_series(*g.alpha_ep, g.q.rescaled(70), 200);
    CHECK(std::fabs((sum - Decimal::from_int(1, 70)).to_double()) < 1e-25);
}
