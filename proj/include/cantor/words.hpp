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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

/// Finite word over {0,1}. May be empty.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<uint8_t> digits);
    /// Parses "0110"; empty string gives the empty word.
    static BinaryWord parse(std::string_view text);

    size_t size() const { return d_.size(); }
    bool empty() const { return d_.empty(); }
    uint8_t operator[](size_t i) const { return d_[i]; }
    const std::vector<uint8_t>& digits() const { return d_; }

    void push_back(uint8_t digit);
    BinaryWord sub(size_t pos, size_t len) const;
    BinaryWord concat(const BinaryWord& o) const;
    BinaryWord repeat(size_t k) const;
    BinaryWord reflected() const;        // digitwise 1-d
    BinaryWord rotated_right(size_t k = 1) const;

    /// a+ : last digit must be 0 and becomes 1.
    BinaryWord plus_form() const;
    /// a- : last digit must be 1 and becomes 0.
    BinaryWord minus_form() const;

    /// Length of the shortest u with *this == u^k.
    size_t primitive_root_length() const;
    bool is_primitive() const { return primitive_root_length() == size(); }

    bool operator==(const BinaryWord& o) const { return d_ == o.d_; }
    std::string str() const;

private:
    std::vector<uint8_t> d_;
};

/// Order of c0^inf vs d0^inf: the finite-word comparison convention used
/// throughout (unequal lengths are resolved by zero padding, not by length).
int word_compare_padded(const BinaryWord& a, const BinaryWord& b);

/// Eventually periodic binary sequence pre.per.per... in canonical form:
/// the period is primitive and the preperiod is minimal (its last digit
/// differs from the digit the rotated period would place there). Canonical
/// forms are equal iff the infinite sequences are equal.
class EpSeq {
public:
    EpSeq() : per_(BinaryWord::parse("0")) {}
    EpSeq(BinaryWord preperiod, BinaryWord period);

    /// Parses "PRE(PER)" or "(PER)", e.g. "000(110)".
    static EpSeq parse(std::string_view text);
    static EpSeq zeros() { return EpSeq({}, BinaryWord::parse("0")); }
    static EpSeq ones() { return EpSeq({}, BinaryWord::parse("1")); }

    const BinaryWord& preperiod() const { return pre_; }
    const BinaryWord& period() const { return per_; }
    bool purely_periodic() const { return pre_.empty(); }

    uint8_t digit(size_t i) const;
    BinaryWord prefix(size_t n) const;

    EpSeq shifted(size_t n) const;
    EpSeq reflected() const;

    bool operator==(const EpSeq& o) const { return pre_ == o.pre_ && per_ == o.per_; }
    std::string str() const;

private:
    BinaryWord pre_, per_;
};

/// Canonical EpSeq from an arbitrary presentation; throws on empty period.
EpSeq canonicalize(const BinaryWord& preperiod, const BinaryWord& period);

/// Lexicographic order of the infinite sequences; decided within
/// |pre_x| + |pre_y| + lcm(|per_x|,|per_y|) + max(|per_x|,|per_y|) digits.
int compare_lex(const EpSeq& x, const EpSeq& y);

inline bool operator<(const EpSeq& a, const EpSeq& b) { return compare_lex(a, b) < 0; }
inline bool operator<=(const EpSeq& a, const EpSeq& b) { return compare_lex(a, b) <= 0; }

/// First n digits of the Thue-Morse sequence 0110100110010110... (n >= 1),
/// computed from the bit-parity formula.
BinaryWord thue_morse_prefix(size_t n);

/// Two-sided self-comparison condition on a word of length >= 2:
/// reflect(a_1..a_{m-i}) <= a_{i+1}..a_m < a_1..a_{m-i} for all 1 <= i < m.
bool is_admissible(const BinaryWord& a);

/// True iff |a| is even and the second half is the reflection of the first.
bool is_self_reflection_form(const BinaryWord& a);

} // namespace cantor
