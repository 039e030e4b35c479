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

#include "cantor/words.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cantor {

BinaryWord::BinaryWord(std::vector<uint8_t> digits) : d_(std::move(digits)) {
    for (uint8_t v : d_)
        if (v > 1) throw invalid_input("binary word digit out of range");
}

BinaryWord BinaryWord::parse(std::string_view text) {
    std::vector<uint8_t> d;
    d.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            d.push_back(0);
        else if (c == '1')
            d.push_back(1);
        else
            throw invalid_input(std::string("invalid word character '") + c + "'");
    }
    return BinaryWord(std::move(d));
}

void BinaryWord::push_back(uint8_t digit) {
    if (digit > 1) throw invalid_input("binary word digit out of range");
    d_.push_back(digit);
}

BinaryWord BinaryWord::sub(size_t pos, size_t len) const {
    if (pos > d_.size() || pos + len > d_.size()) throw invalid_input("word slice out of range");
    return BinaryWord(std::vector<uint8_t>(d_.begin() + pos, d_.begin() + pos + len));
}

BinaryWord BinaryWord::concat(const BinaryWord& o) const {
    std::vector<uint8_t> d = d_;
    d.insert(d.end(), o.d_.begin(), o.d_.end());
    return BinaryWord(std::move(d));
}

BinaryWord BinaryWord::repeat(size_t k) const {
    std::vector<uint8_t> d;
    d.reserve(d_.size() * k);
    for (size_t i = 0; i < k; ++i) d.insert(d.end(), d_.begin(), d_.end());
    return BinaryWord(std::move(d));
}

BinaryWord BinaryWord::reflected() const {
    std::vector<uint8_t> d = d_;
    for (auto& v : d) v = 1 - v;
    return BinaryWord(std::move(d));
}

BinaryWord BinaryWord::rotated_right(size_t k) const {
    if (d_.empty()) return *this;
    k %= d_.size();
    std::vector<uint8_t> d = d_;
    std::rotate(d.begin(), d.end() - k, d.end());
    return BinaryWord(std::move(d));
}

BinaryWord BinaryWord::plus_form() const {
    if (d_.empty() || d_.back() != 0) throw invalid_input("plus_form requires last digit 0");
    std::vector<uint8_t> d = d_;
    d.back() = 1;
    return BinaryWord(std::move(d));
}

BinaryWord BinaryWord::minus_form() const {
    if (d_.empty() || d_.back() != 1) throw invalid_input("minus_form requires last digit 1");
    std::vector<uint8_t> d = d_;
    d.back() = 0;
    return BinaryWord(std::move(d));
}

size_t BinaryWord::primitive_root_length() const {
    size_t m = d_.size();
    for (size_t len = 1; len < m; ++len) {
        if (m % len != 0) continue;
        bool ok = true;
        for (size_t i = len; i < m && ok; ++i) ok = d_[i] == d_[i - len];
        if (ok) return len;
    }
    return m;
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(d_.size());
    for (uint8_t v : d_) s += static_cast<char>('0' + v);
    return s;
}

int word_compare_padded(const BinaryWord& a, const BinaryWord& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        uint8_t x = i < a.size() ? a[i] : 0;
        uint8_t y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

EpSeq::EpSeq(BinaryWord preperiod, BinaryWord period) {
    if (period.empty()) throw invalid_input("EpSeq period must be nonempty");
    per_ = period.sub(0, period.primitive_root_length());
    pre_ = std::move(preperiod);
    // Absorb preperiod digits that agree with the digit a right-rotated
    // period would place there: u.x.(v)^inf == u.(x v_0..v_{k-2})^inf when
    // x == v_{k-1}.
    while (!pre_.empty() && pre_[pre_.size() - 1] == per_[per_.size() - 1]) {
        pre_ = pre_.sub(0, pre_.size() - 1);
        per_ = per_.rotated_right(1);
    }
}

EpSeq canonicalize(const BinaryWord& preperiod, const BinaryWord& period) {
    return EpSeq(preperiod, period);
}

EpSeq EpSeq::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.find(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
        close + 1 != text.size())
        throw invalid_input("EpSeq text must look like PRE(PER): " + std::string(text));
    BinaryWord pre = BinaryWord::parse(text.substr(0, open));
    BinaryWord per = BinaryWord::parse(text.substr(open + 1, close - open - 1));
    return EpSeq(std::move(pre), std::move(per));
}

uint8_t EpSeq::digit(size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

BinaryWord EpSeq::prefix(size_t n) const {
    std::vector<uint8_t> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = digit(i);
    return BinaryWord(std::move(d));
}

EpSeq EpSeq::shifted(size_t n) const {
    if (n <= pre_.size()) return EpSeq(pre_.sub(n, pre_.size() - n), per_);
    size_t k = (n - pre_.size()) % per_.size();
    BinaryWord rot = per_.rotated_right(per_.size() - k);  // left rotation by k
    return EpSeq({}, rot);
}

EpSeq EpSeq::reflected() const { return EpSeq(pre_.reflected(), per_.reflected()); }

std::string EpSeq::str() const { return pre_.str() + "(" + per_.str() + ")"; }

int compare_lex(const EpSeq& x, const EpSeq& y) {
    size_t kx = x.period().size(), ky = y.period().size();
    size_t bound = x.preperiod().size() + y.preperiod().size() + std::lcm(kx, ky) + std::max(kx, ky);
    for (size_t i = 0; i < bound; ++i) {
        uint8_t a = x.digit(i), b = y.digit(i);
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

BinaryWord thue_morse_prefix(size_t n) {
    if (n < 1) throw invalid_input("thue_morse_prefix requires n >= 1");
    std::vector<uint8_t> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = static_cast<uint8_t>(std::popcount(i) & 1);
    return BinaryWord(std::move(d));
}

bool is_admissible(const BinaryWord& a) {
    size_t m = a.size();
    if (m < 2) throw invalid_input("admissibility requires length >= 2");
    for (size_t i = 1; i < m; ++i) {
        // suffix a_{i+1}..a_m vs prefix a_1..a_{m-i}, equal lengths
        int cmp_low = 0, cmp_high = 0;
        for (size_t j = 0; j < m - i; ++j) {
            uint8_t s = a[i + j], p = a[j];
            if (cmp_high == 0 && s != p) cmp_high = s < p ? -1 : 1;
            uint8_t rp = 1 - p;
            if (cmp_low == 0 && s != rp) cmp_low = s < rp ? -1 : 1;
            if (cmp_low != 0 && cmp_high != 0) break;
        }
        if (!(cmp_low >= 0 && cmp_high < 0)) return false;
    }
    return true;
}

bool is_self_reflection_form(const BinaryWord& a) {
    size_t m = a.size();
    if (m % 2 != 0 || m == 0) return false;
    for (size_t i = 0; i < m / 2; ++i)
        if (a[m / 2 + i] != 1 - a[i]) return false;
    return true;
}

} // namespace cantor
