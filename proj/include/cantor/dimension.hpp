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
#include <vector>

#include "cantor/coding.hpp"

namespace cantor {

/// Symbolic survivor system: all sequences whose every shift lies between
/// `lower` and its reflection in lexicographic order.
struct SandwichSystem {
    EpSeq lower;
    EpSeq upper;  // always reflect(lower)

    static SandwichSystem from_beta(EpSeq beta) {
        SandwichSystem s;
        s.upper = beta.reflected();
        s.lower = std::move(beta);
        return s;
    }
};

/// Window test: no suffix of w is decided (inside the window) to be below
/// the lower bound's prefix or above the upper bound's prefix. The language
/// of window-admissible words is factor-closed and shrinks toward the true
/// sandwich language as windows grow.
bool locally_admissible(const BinaryWord& w, const SandwichSystem& sys);

/// Exhaustive count of window-admissible words of length n (prefix-pruned
/// DFS). Guard: n <= 24.
uint64_t count_blocks(const SandwichSystem& sys, size_t n);

/// De-Bruijn-style block graph: vertices are window-admissible n-blocks,
/// edges join overlap-compatible blocks whose merged (n+1)-block is
/// window-admissible. `alive` marks the bi-essential core (every retained
/// vertex has in- and out-degree >= 1 after iterated pruning).
struct TransferGraph {
    using Code = unsigned __int128;  // supports block lengths up to 120
    size_t block_len = 0;
    std::vector<Code> codes;              // sorted vertex codes, w[0] = top bit
    std::vector<uint32_t> succ_begin;     // CSR offsets into succ
    std::vector<uint32_t> succ;           // successor vertex indices
    std::vector<uint8_t> alive;           // bi-essential core mask

    size_t vertex_count() const { return codes.size(); }
    size_t edge_count() const { return succ.size(); }

    /// Number of paths with k edges in the full (unpruned) graph; equals the
    /// number of window-admissible words of length block_len + k.
    uint64_t path_count(size_t k) const;
};

TransferGraph transfer_graph(const SandwichSystem& sys, size_t n,
                             size_t vertex_cap = 4'000'000);

struct SpectralResult {
    double lambda = 0;   // point estimate
    double lo = 0;       // Collatz-Wielandt lower bound
    double hi = 0;       // Collatz-Wielandt upper bound
    std::vector<uint32_t> max_scc;  // vertex indices of the dominating component
};

/// Perron root of the bi-essential core: power iteration on A+I per strongly
/// connected component, two-sided Collatz-Wielandt bounds. Empty graph -> 0.
SpectralResult spectral_radius(const TransferGraph& g, double tol = 1e-13);

/// Perron root of an explicit adjacency list (same iteration; used by the
/// aligned-block cross-checks).
SpectralResult spectral_radius_adj(const std::vector<std::vector<uint32_t>>& adj,
                                   double tol = 1e-13);

/// Entropy/dimension answer with a certified-side bracket and convergence
/// metadata. Entropy fields are in log units; dimension fields divide by
/// -log rho (filled only by the dimension-level entry points).
struct DimensionResult {
    double value = 0;
    double upper_bound = 0;
    double lower_witness = 0;
    double entropy = 0;
    size_t block_len_used = 0;
    bool converged = false;
    bool empty = false;
    bool cycle_validated = false;
};

struct DimOptions {
    size_t n_start = 0;   // 0: preperiod + period of the lower bound
    size_t n_max = 40;
    double tol = 1e-9;
    size_t vertex_cap = 4'000'000;
};

/// Window entropies h_n = log lambda(transfer_graph(sys, n)) along
/// period-aligned n until they stabilize within tol. h_n is an upper bound
/// for the true entropy (the window language is a relaxation); the lower
/// witness is the Collatz-Wielandt lower bound of the dominating component,
/// reported only when a maximal cycle of that component spells a genuinely
/// in-sandwich periodic sequence.
DimensionResult entropy(const SandwichSystem& sys, const DimOptions& opts = {});

/// psi(t) = dim_H of the survivor set at level t: entropy of the sandwich
/// system built from delta(t), divided by -log rho.
DimensionResult dim_survivor(const Rational& t, const RhoParams& p,
                             const DimOptions& opts = {});

struct LambdaNCheck {
    double closed_form = 0;  // log(2^N - 2) / (-N log rho)
    double engine = 0;       // transfer-matrix route on the aligned-block graph
};

/// Dimension of the aligned-block system forbidding 0^N and 1^N at positions
/// that are multiples of N, both in closed form and through the engine.
LambdaNCheck lambda_N_dimension(size_t N, const RhoParams& p);

/// Dimension (in the -log rho metric) of the subsystem of sequences starting
/// with `prefix`: max Perron root over components reachable from vertices
/// whose block begins with prefix. Requires |prefix| <= n.
DimensionResult dim_cylinder(const SandwichSystem& sys, const BinaryWord& prefix, size_t n,
                             const RhoParams& p, double tol = 1e-13);

} // namespace cantor
