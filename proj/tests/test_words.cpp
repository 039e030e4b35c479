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

#include "cantor/words.hpp"

using namespace cantor;

namespace {

EpSeq random_seq(std::mt19937& rng) {
    std::uniform_int_distribution<int> pre_len(0, 4), per_len(1, 6), bit(0, 1);
    BinaryWord pre, per;
    int pl = pre_len(rng), kl = per_len(rng);
    for (int i = 0; i < pl; ++i) pre.push_back(static_cast<uint8_t>(bit(rng)));
    for (int i = 0; i < kl; ++i) per.push_back(static_cast<uint8_t>(bit(rng)));
    return EpSeq(pre, per);
}

// Direct transcription of the two-sided admissibility inequalities using the
// padded finite-word order; independent of the production scan.
bool admissible_reference(const BinaryWord& a) {
    size_t m = a.size();
    for (size_t i = 1; i < m; ++i) {
        BinaryWord suffix = a.sub(i, m - i);
        BinaryWord prefix = a.sub(0, m - i);
        if (!(word_compare_padded(prefix.reflected(), suffix) <= 0)) return false;
        if (!(word_compare_padded(suffix, prefix) < 0)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("word basics and forms") {
    BinaryWord w = BinaryWord::parse("110");
    CHECK(w.str() == "110");
    CHECK(w.reflected().str() == "001");
    CHECK(w.plus_form().str() == "111");
    CHECK_THROWS_AS(w.minus_form(), invalid_input);  // last digit is 0
    CHECK(BinaryWord::parse("111").minus_form().str() == "110");
    CHECK(BinaryWord::parse("0101").primitive_root_length() == 2);
    CHECK(BinaryWord::parse("0110").primitive_root_length() == 4);
    CHECK_THROWS_AS(BinaryWord::parse("012"), invalid_input);
}

TEST_CASE("padded finite-word order") {
    CHECK(word_compare_padded(BinaryWord::parse("10"), BinaryWord::parse("100")) == 0);
    CHECK(word_compare_padded(BinaryWord::parse("10"), BinaryWord::parse("11")) < 0);
    CHECK(word_compare_padded(BinaryWord::parse("101"), BinaryWord::parse("10")) > 0);
}

TEST_CASE("canonical forms") {
    CHECK(EpSeq(BinaryWord::parse("0"), BinaryWord::parse("10")).str() == "(01)");
    CHECK(EpSeq({}, BinaryWord::parse("0101")).str() == "(01)");
    CHECK(EpSeq(BinaryWord::parse("1"), BinaryWord::parse("1")).str() == "(1)");
    CHECK(EpSeq::parse("000(110)").str() == "00(011)");  // same sequence
    CHECK_THROWS_AS(EpSeq({}, BinaryWord{}), invalid_input);
    // canonical equality decides sequence equality
    CHECK(EpSeq::parse("0(10)") == EpSeq::parse("(01)"));
}

TEST_CASE("compare_lex on presentations and prefixes") {
    CHECK(compare_lex(EpSeq::parse("(01)"), EpSeq::parse("(10)")) < 0);
    CHECK(compare_lex(EpSeq::parse("0(10)"), EpSeq::parse("(01)")) == 0);
    // complement of the Thue-Morse tail vs (001)^inf: first difference at
    // position 5 (1-based), complement side larger
    BinaryWord tm = thue_morse_prefix(9);
    BinaryWord tail(std::vector<uint8_t>(tm.digits().begin() + 1, tm.digits().end()));
    BinaryWord comp = tail.reflected();  // 00101100
    EpSeq comp_seq(comp, BinaryWord::parse("0"));
    EpSeq ref = EpSeq::parse("(001)");
    CHECK(compare_lex(comp_seq, ref) > 0);
    size_t first_diff = 0;
    while (comp_seq.digit(first_diff) == ref.digit(first_diff)) ++first_diff;
    CHECK(first_diff == 4);  // 0-based index 4 == position 5
}

TEST_CASE("shift examples") {
    CHECK(EpSeq::parse("(01)").shifted(1) == EpSeq::parse("(10)"));
    CHECK(EpSeq::parse("0(10)").shifted(0) == EpSeq::parse("(01)"));
    CHECK(EpSeq::parse("110(0)").shifted(2) == EpSeq::zeros());
}

TEST_CASE("reflect examples") {
    CHECK(EpSeq::parse("(01)").reflected() == EpSeq::parse("(10)"));
    CHECK(EpSeq::zeros().reflected() == EpSeq::ones());
    CHECK(BinaryWord::parse("110").reflected().str() == "001");
}

TEST_CASE("thue-morse prefix values and recursion") {
    CHECK(thue_morse_prefix(8).str() == "01101001");
    CHECK(thue_morse_prefix(1).str() == "0");
    CHECK(thue_morse_prefix(16).str() == "0110100110010110");
    // doubling recursion: prefix(2^(k+1)) = prefix(2^k) . reflect(prefix(2^k))
    for (size_t k = 0; k <= 10; ++k) {
        BinaryWord half = thue_morse_prefix(size_t(1) << k);
        BinaryWord full = thue_morse_prefix(size_t(1) << (k + 1));
        CHECK(full == half.concat(half.reflected()));
    }
    CHECK_THROWS_AS(thue_morse_prefix(0), invalid_input);
}

TEST_CASE("admissibility examples and brute force") {
    CHECK(is_admissible(BinaryWord::parse("10")));
    CHECK_FALSE(is_admissible(BinaryWord::parse("11")));
    CHECK(is_admissible(BinaryWord::parse("110")));
    CHECK_THROWS_AS(is_admissible(BinaryWord::parse("1")), invalid_input);
    // all words of length <= 10 against the independent transcription
    for (size_t len = 2; len <= 10; ++len) {
        for (uint64_t code = 0; code < (uint64_t(1) << len); ++code) {
            std::vector<uint8_t> d(len);
            for (size_t i = 0; i < len; ++i) d[i] = (code >> (len - 1 - i)) & 1;
            BinaryWord w(std::move(d));
            CHECK(is_admissible(w) == admissible_reference(w));
        }
    }
}

TEST_CASE("self reflection form") {
    CHECK(is_self_reflection_form(BinaryWord::parse("10")));
    CHECK_FALSE(is_self_reflection_form(BinaryWord::parse("110")));
    CHECK(is_self_reflection_form(BinaryWord::parse("1100")));
    CHECK_FALSE(is_self_reflection_form(BinaryWord::parse("1010")));
}

TEST_CASE("lexicographic order is total on a random corpus") {
    std::mt19937 rng(777);
    std::vector<EpSeq> corpus;
    for (int i = 0; i < 36; ++i) corpus.push_back(random_seq(rng));
    int triples = 0;
    for (const auto& x : corpus)
        for (const auto& y : corpus)
            for (const auto& z : corpus) {
                ++triples;
                int xy = compare_lex(x, y), yx = compare_lex(y, x);
                CHECK(xy == -yx);  // antisymmetry
                if (xy == 0) CHECK(x == y);
                if (xy <= 0 && compare_lex(y, z) <= 0) CHECK(compare_lex(x, z) <= 0);
            }
    CHECK(triples >= 1000);
}

TEST_CASE("reflection reverses the order") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 300; ++i) {
        EpSeq x = random_seq(rng), y = random_seq(rng);
        CHECK(compare_lex(x, y) == -compare_lex(x.reflected(), y.reflected()));
    }
}

TEST_CASE("shift additivity") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<size_t> nd(0, 20);
    for (int i = 0; i < 200; ++i) {
        EpSeq x = random_seq(rng);
        size_t m = nd(rng), n = nd(rng);
        CHECK(x.shifted(m + n) == x.shifted(m).shifted(n));
    }
}
