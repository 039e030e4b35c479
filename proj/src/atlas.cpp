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

#include "cantor/atlas.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cantor/expansion.hpp"
#include "cantor/parallel.hpp"

namespace cantor {

FundamentalInterval fundamental_interval(const BinaryWord& a, const RhoParams& p) {
    if (a.size() == 1 && a[0] == 0) {
        return {a, CantorPoint(EpSeq::zeros(), p), CantorPoint(EpSeq::ones(), p)};
    }
    if (!is_admissible(a)) throw invalid_input("generator is not admissible: " + a.str());
    if (is_self_reflection_form(a))
        throw invalid_input("generator has self-reflection form: " + a.str());
    EpSeq left(a.plus_form().reflected(), a);
    EpSeq right({}, a.reflected());
    FundamentalInterval j{a, CantorPoint(std::move(left), p), CantorPoint(std::move(right), p)};
    if (!(j.t_left.value < j.t_right.value))
        throw std::logic_error("fundamental interval with inverted endpoints");
    return j;
}

std::vector<FundamentalInterval> enumerate_fundamental_intervals(size_t max_len,
                                                                 const RhoParams& p) {
    if (max_len > 16) throw resource_limit("enumerate_fundamental_intervals guard: max_len <= 16");
    std::vector<FundamentalInterval> out;
    out.push_back(fundamental_interval(BinaryWord::parse("0"), p));
    for (size_t len = 2; len <= max_len; ++len) {
        // admissible words start with 1 and end with 0
        size_t mid_bits = len - 2;
        for (uint64_t mid = 0; mid < (uint64_t(1) << mid_bits); ++mid) {
            std::vector<uint8_t> d(len);
            d[0] = 1;
            d[len - 1] = 0;
            for (size_t i = 0; i < mid_bits; ++i) d[1 + i] = (mid >> (mid_bits - 1 - i)) & 1;
            BinaryWord a(std::move(d));
            if (!is_admissible(a) || is_self_reflection_form(a)) continue;
            out.push_back(fundamental_interval(a, p));
        }
    }
    std::sort(out.begin(), out.end(), [](const FundamentalInterval& x, const FundamentalInterval& y) {
        if (x.t_left.value != y.t_left.value) return x.t_left.value < y.t_left.value;
        return y.t_right.value < x.t_right.value;
    });
    // Structural invariant: closures pairwise disjoint or nested.
    for (size_t i = 0; i < out.size(); ++i) {
        for (size_t j = i + 1; j < out.size(); ++j) {
            const auto& A = out[i];
            const auto& B = out[j];
            bool disjoint = A.t_right.value < B.t_left.value || B.t_right.value < A.t_left.value;
            bool a_in_b = B.t_left.value <= A.t_left.value && A.t_right.value <= B.t_right.value;
            bool b_in_a = A.t_left.value <= B.t_left.value && B.t_right.value <= A.t_right.value;
            if (!(disjoint || a_in_b || b_in_a))
                throw std::logic_error("fundamental intervals overlap without nesting: " +
                                       A.generator.str() + " vs " + B.generator.str());
        }
    }
    return out;
}

namespace {

BinaryWord block_for_pair(uint8_t di, uint8_t dnext, const BinaryWord& a, const BinaryWord& ap,
                          const BinaryWord& ra, const BinaryWord& rap) {
    if (di == 0 && dnext == 0) return a;
    if (di == 0 && dnext == 1) return ap;
    if (di == 1 && dnext == 0) return rap;
    return ra;
}

} // namespace

EpSeq renormalize_seq(const EpSeq& d, const BinaryWord& a) {
    if (d.digit(0) != 0) throw invalid_input("renormalize_seq requires a coding starting with 0");
    BinaryWord ap = a.plus_form();
    BinaryWord ra = a.reflected();
    BinaryWord rap = ap.reflected();
    size_t p = d.preperiod().size();
    size_t k = d.period().size();
    // Pair (d_i, d_{i+1}) (1-based) is periodic in i for i >= p+1 with period k.
    BinaryWord pre = rap;
    for (size_t i = 1; i <= p; ++i) {
        BinaryWord blk = block_for_pair(d.digit(i - 1), d.digit(i), a, ap, ra, rap);
        pre = pre.concat(blk);
    }
    BinaryWord per;
    for (size_t i = p + 1; i <= p + k; ++i) {
        BinaryWord blk = block_for_pair(d.digit(i - 1), d.digit(i), a, ap, ra, rap);
        per = per.concat(blk);
    }
    return EpSeq(std::move(pre), std::move(per));
}

EpSeq renormalize_seq_inverse(const EpSeq& y, const BinaryWord& a) {
    size_t m = a.size();
    BinaryWord ap = a.plus_form();
    BinaryWord ra = a.reflected();
    BinaryWord rap = ap.reflected();
    if (!(y.prefix(m) == rap))
        throw not_in_image("coding does not start with the reflected incremented generator");

    auto classify_block = [&](const BinaryWord& b, uint8_t& di, uint8_t& dnext) {
        if (b == a) {
            di = 0;
            dnext = 0;
        } else if (b == ap) {
            di = 0;
            dnext = 1;
        } else if (b == rap) {
            di = 1;
            dnext = 0;
        } else if (b == ra) {
            di = 1;
            dnext = 1;
        } else {
            throw not_in_image("block is not a substitution image: " + b.str());
        }
    };

    size_t py = y.preperiod().size();
    size_t ky = y.period().size();
    std::vector<uint8_t> digits{0};  // d_1 = 0
    // State for cycle detection: (phase of block start past the preperiod,
    // last decoded digit). Blocks start at offsets (b-1)*m.
    std::map<std::pair<size_t, uint8_t>, size_t> seen;
    for (size_t b = 2;; ++b) {
        size_t off = (b - 1) * m;
        if (off >= py) {
            size_t phase = (off - py) % ky;
            auto key = std::make_pair(phase, digits.back());
            auto [it, fresh] = seen.emplace(key, digits.size());
            if (!fresh) {
                size_t first = it->second;
                BinaryWord dpre(std::vector<uint8_t>(digits.begin(), digits.begin() + first));
                BinaryWord dper(std::vector<uint8_t>(digits.begin() + first, digits.end()));
                return EpSeq(std::move(dpre), std::move(dper));
            }
        }
        BinaryWord blk = y.shifted(off).prefix(m);
        uint8_t di = 0, dnext = 0;
        classify_block(blk, di, dnext);
        if (di != digits.back())
            throw not_in_image("inconsistent digit chain in block decoding");
        digits.push_back(dnext);
        if (digits.size() > (1u << 20))
            throw resource_limit("block decoding did not close into a cycle");
    }
}

CantorPoint renormalize_point(const CantorPoint& x, const BinaryWord& a, const RhoParams& p) {
    if (x.value > p.rho()) throw invalid_input("renormalize_point requires x <= rho");
    return CantorPoint(renormalize_seq(x.coding, a), p);
}

CantorPoint renormalize_point_inverse(const CantorPoint& y, const BinaryWord& a,
                                      const RhoParams& p) {
    return CantorPoint(renormalize_seq_inverse(y.coding, a), p);
}

Atlas::Atlas(const RhoParams& p, size_t max_len) : params_(p), max_len_(max_len) {
    intervals_ = enumerate_fundamental_intervals(max_len, p);
    auto [lo, hi] = t_kl_bounds(p, 64);
    t_kl_lo_ = lo;
    t_kl_hi_ = hi;
}

std::variant<FundamentalInterval, CascadeReport>
Atlas::smallest_containing_interval(const CantorPoint& t) const {
    const FundamentalInterval* innermost = nullptr;
    size_t containing = 0, deepest = 0;
    for (const auto& j : intervals_) {
        if (j.is_outermost() || !j.strictly_contains(t.value)) continue;
        ++containing;
        deepest = std::max(deepest, j.generator.size());
        if (!innermost || innermost->t_left.value < j.t_left.value ||
            (innermost->t_left.value == j.t_left.value &&
             j.t_right.value < innermost->t_right.value))
            innermost = &j;
    }
    if (innermost && innermost->generator.size() + 1 >= max_len_)
        return CascadeReport{containing, deepest};
    if (innermost) return *innermost;
    return intervals_.front().is_outermost() ? intervals_.front()
                                             : fundamental_interval(BinaryWord::parse("0"), params_);
}

LevelSetResult Atlas::level_set_dimension(const CantorPoint& t, const DimOptions& opts) const {
    auto cls = classify_gamma(t.coding, params_);
    if (cls.kind == GammaKind::NotInGamma)
        throw invalid_input("level_set_dimension requires t in the density spectrum");
    LevelSetResult out;
    out.depth_certified = max_len_;
    if (cls.kind == GammaKind::IsolatedInGamma) {
        out.kind = LevelSetKind::CountablyInfinite;
        return out;
    }
    if (t.value.is_zero()) {
        out.kind = LevelSetKind::FullAtZero;
        out.dimension = dim_survivor(Rational(0), params_, opts).value;
        return out;
    }
    auto found = smallest_containing_interval(t);
    if (std::holds_alternative<CascadeReport>(found)) {
        out.kind = LevelSetKind::ZeroByCascade;
        return out;
    }
    const auto& j = std::get<FundamentalInterval>(found);
    if (j.is_outermost()) {
        out.kind = LevelSetKind::FromRenormalization;
        out.word = j.generator;  // identity renormalization
        out.t_hat = t;
        out.dimension = dim_survivor(t.value, params_, opts).value;
        return out;
    }
    CantorPoint t_hat = renormalize_point_inverse(t, j.generator, params_);
    out.kind = LevelSetKind::FromRenormalization;
    out.word = j.generator;
    out.t_hat = t_hat;
    out.dimension =
        dim_survivor(t_hat.value, params_, opts).value / static_cast<double>(j.generator.size());
    return out;
}

Atlas::ProbeResult Atlas::bifurcation_probe(const Rational& t) const {
    if (t > t_kl_hi_) {
        // Certified zero region of the staircase.
        return {ProbeVerdict::InPlateauInterior, std::nullopt};
    }
    const FundamentalInterval* outermost = nullptr;
    for (const auto& j : intervals_) {
        if (j.is_outermost() || !j.strictly_contains(t)) continue;
        if (!outermost || j.t_left.value < outermost->t_left.value) outermost = &j;
    }
    if (outermost) return {ProbeVerdict::InPlateauInterior, outermost->generator};
    for (const auto& j : intervals_) {
        if (t == j.t_left.value || t == j.t_right.value)
            return {ProbeVerdict::BoundaryOrE, std::nullopt};
    }
    return {ProbeVerdict::Undecided, std::nullopt};
}

size_t Atlas::nesting_depth(const FundamentalInterval& j) const {
    size_t depth = 0;
    for (const auto& other : intervals_) {
        if (other.t_left.value == j.t_left.value && other.t_right.value == j.t_right.value)
            continue;
        if (other.t_left.value <= j.t_left.value && j.t_right.value <= other.t_right.value)
            ++depth;
    }
    return depth;
}

std::vector<PlateauSegment> staircase(const RhoParams& p, size_t max_word_len,
                                      const DimOptions& opts) {
    if (max_word_len > 16) throw resource_limit("staircase guard: max_word_len <= 16");
    auto intervals = enumerate_fundamental_intervals(max_word_len, p);
    // Maximal proper intervals: not strictly contained in another proper one.
    std::vector<const FundamentalInterval*> maximal;
    for (const auto& j : intervals) {
        if (j.is_outermost()) continue;
        bool contained = false;
        for (const auto& other : intervals) {
            if (other.is_outermost() || &other == &j) continue;
            if (other.t_left.value <= j.t_left.value && j.t_right.value <= other.t_right.value &&
                !(other.t_left.value == j.t_left.value && other.t_right.value == j.t_right.value)) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(&j);
    }
    std::vector<PlateauSegment> segments(maximal.size());
    parallel_for(maximal.size(), [&](size_t i) {
        const FundamentalInterval& j = *maximal[i];
        SandwichSystem sys = SandwichSystem::from_beta(j.t_right.coding);
        DimensionResult r = entropy(sys, opts);
        segments[i] = PlateauSegment{j.t_left.value, j.t_right.value,
                                     r.value / p.neg_log_rho(), j.generator, r.converged};
    });
    std::sort(segments.begin(), segments.end(),
              [](const PlateauSegment& a, const PlateauSegment& b) { return a.t_left < b.t_left; });
    // Terminal zero segment: from the certified upper bound of the zero-onset
    // level to the cutoff rho/(1+rho) where the survivor set dies.
    auto [kl_lo, kl_hi] = t_kl_bounds(p, 64);
    Rational t_g = p.rho() / (Rational(1) + p.rho());
    segments.push_back(PlateauSegment{kl_hi, t_g, 0.0, BinaryWord{}, true});
    return segments;
}

} // namespace cantor
