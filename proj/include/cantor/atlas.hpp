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
#include <variant>

#include "cantor/dimension.hpp"

namespace cantor {

/// Plateau interval J(a) = [t_L, t_R) of an admissible generator a (not of
/// self-reflection form), with endpoint codings reflect(a+)a^inf and
/// reflect(a)^inf. The word "0" denotes the outermost interval [0, 1).
struct FundamentalInterval {
    BinaryWord generator;
    CantorPoint t_left;
    CantorPoint t_right;

    bool is_outermost() const { return generator.size() == 1 && generator[0] == 0; }
    bool strictly_contains(const Rational& t) const {
        return t_left.value < t && t < t_right.value;
    }
};

FundamentalInterval fundamental_interval(const BinaryWord& a, const RhoParams& p);

/// All fundamental intervals with generator length <= max_len (plus the
/// outermost J(0)), sorted by (t_left asc, t_right desc). Verifies the
/// pairwise closures-disjoint-or-nested structure; a violation throws
/// logic_error. Guard: max_len <= 16.
std::vector<FundamentalInterval> enumerate_fundamental_intervals(size_t max_len,
                                                                 const RhoParams& p);

struct CascadeReport {
    size_t containing_count = 0;  // intervals strictly containing t
    size_t deepest_generator = 0; // longest such generator length
};

/// Block substitution of the renormalization: first block reflect(a+), then
/// block i+1 is a / a+ / reflect(a+) / reflect(a) according to the digit
/// pair (d_i, d_{i+1}). Requires d_1 = 0.
EpSeq renormalize_seq(const EpSeq& d, const BinaryWord& a);

/// Inverse substitution; throws not_in_image when the coding is not a block
/// concatenation of the four substitution blocks.
EpSeq renormalize_seq_inverse(const EpSeq& y, const BinaryWord& a);

CantorPoint renormalize_point(const CantorPoint& x, const BinaryWord& a, const RhoParams& p);
CantorPoint renormalize_point_inverse(const CantorPoint& y, const BinaryWord& a,
                                      const RhoParams& p);

enum class LevelSetKind { CountablyInfinite, FromRenormalization, ZeroByCascade, FullAtZero };

struct LevelSetResult {
    double dimension = 0;
    LevelSetKind kind = LevelSetKind::CountablyInfinite;
    std::optional<BinaryWord> word;     // renormalization generator
    std::optional<CantorPoint> t_hat;   // pulled-back level
    size_t depth_certified = 0;
};

struct PlateauSegment {
    Rational t_left;
    Rational t_right;
    double psi = 0;
    BinaryWord word;
    bool converged = false;
};

/// Immutable snapshot of the enumerated intervals with level-set queries.
class Atlas {
public:
    Atlas(const RhoParams& p, size_t max_len);

    const std::vector<FundamentalInterval>& intervals() const { return intervals_; }
    const RhoParams& params() const { return params_; }
    size_t max_len() const { return max_len_; }

    /// Innermost enumerated interval with t strictly inside; CascadeReport
    /// when the nesting count is still growing at the enumeration depth;
    /// falls back to J(0) when nothing else contains t.
    std::variant<FundamentalInterval, CascadeReport>
    smallest_containing_interval(const CantorPoint& t) const;

    LevelSetResult level_set_dimension(const CantorPoint& t, const DimOptions& opts = {}) const;

    enum class ProbeVerdict { InPlateauInterior, BoundaryOrE, Undecided };
    struct ProbeResult {
        ProbeVerdict verdict;
        std::optional<BinaryWord> plateau_word;  // set for InPlateauInterior
    };
    /// Depth-bounded bifurcation probe; never claims exact membership.
    ProbeResult bifurcation_probe(const Rational& t) const;

    /// Number of enumerated intervals strictly containing the given one.
    size_t nesting_depth(const FundamentalInterval& j) const;

private:
    RhoParams params_;
    size_t max_len_;
    std::vector<FundamentalInterval> intervals_;
    Rational t_kl_hi_;  // certified upper bound for the zero-dimension onset
    Rational t_kl_lo_;
};

/// Devil's-staircase dataset: maximal plateau segments from generators up to
/// max_word_len, sorted by t_left, plus the terminal zero segment. Guard:
/// max_word_len <= 16.
std::vector<PlateauSegment> staircase(const RhoParams& p, size_t max_word_len,
                                      const DimOptions& opts = {});

} // namespace cantor
