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

#include "cantor/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace cantor {

namespace {

std::vector<uint8_t> bound_prefix(const EpSeq& s, size_t n) {
    std::vector<uint8_t> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = s.digit(i);
    return out;
}

// One-digit extension of the window check. lo_t/hi_t hold the suffix offsets
// whose comparison with the bound prefixes is still tied at length L. Returns
// false when the new digit decides a violation; otherwise fills the new tie
// sets for length L+1.
bool extend_ok(const std::vector<uint8_t>& lo, const std::vector<uint8_t>& hi,
               const std::vector<uint32_t>& lo_t, const std::vector<uint32_t>& hi_t, size_t L,
               uint8_t d, std::vector<uint32_t>& nlo, std::vector<uint32_t>& nhi) {
    nlo.clear();
    nhi.clear();
    for (uint32_t j : lo_t) {
        uint8_t b = lo[L - j];
        if (d < b) return false;
        if (d == b) nlo.push_back(j);
    }
    for (uint32_t j : hi_t) {
        uint8_t b = hi[L - j];
        if (d > b) return false;
        if (d == b) nhi.push_back(j);
    }
    if (d < lo[0]) return false;
    if (d == lo[0]) nlo.push_back(static_cast<uint32_t>(L));
    if (d > hi[0]) return false;
    if (d == hi[0]) nhi.push_back(static_cast<uint32_t>(L));
    return true;
}

struct DfsBuffers {
    std::vector<std::vector<uint32_t>> lo_t, hi_t;
    explicit DfsBuffers(size_t depth) : lo_t(depth + 2), hi_t(depth + 2) {}
};

// Depth-first walk over window-admissible words of length `target`,
// lexicographic order. Visit(code, level_buffers) runs at the leaves.
template <typename Visit>
void walk_admissible(const std::vector<uint8_t>& lo, const std::vector<uint8_t>& hi,
                     size_t target, DfsBuffers& buf, Visit&& visit) {
    // level L holds ties valid for the word of length L
    struct Frame {
        TransferGraph::Code code;
        size_t L;
        uint8_t next_digit;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0});
    buf.lo_t[0].clear();
    buf.hi_t[0].clear();
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.L == target) {
            visit(f.code, buf.lo_t[f.L], buf.hi_t[f.L]);
            stack.pop_back();
            continue;
        }
        if (f.next_digit > 1) {
            stack.pop_back();
            continue;
        }
        uint8_t d = f.next_digit++;
        if (extend_ok(lo, hi, buf.lo_t[f.L], buf.hi_t[f.L], f.L, d, buf.lo_t[f.L + 1],
                      buf.hi_t[f.L + 1])) {
            TransferGraph::Code code = (f.code << 1) | d;
            size_t L = f.L + 1;
            stack.push_back({code, L, 0});
        }
    }
}

} // namespace

bool locally_admissible(const BinaryWord& w, const SandwichSystem& sys) {
    size_t m = w.size();
    for (size_t j = 0; j < m; ++j) {
        int cmp_lo = 0, cmp_hi = 0;
        for (size_t i = 0; j + i < m; ++i) {
            uint8_t c = w[j + i];
            uint8_t bl = sys.lower.digit(i), bh = sys.upper.digit(i);
            if (cmp_lo == 0 && c != bl) cmp_lo = c < bl ? -1 : 1;
            if (cmp_hi == 0 && c != bh) cmp_hi = c < bh ? -1 : 1;
            if (cmp_lo != 0 && cmp_hi != 0) break;
        }
        if (cmp_lo < 0 || cmp_hi > 0) return false;
    }
    return true;
}

uint64_t count_blocks(const SandwichSystem& sys, size_t n) {
    if (n > 24) throw resource_limit("count_blocks guard: n <= 24");
    if (n == 0) return 1;
    auto lo = bound_prefix(sys.lower, n + 1);
    auto hi = bound_prefix(sys.upper, n + 1);
    uint64_t count = 0;
    DfsBuffers buf(n);
    walk_admissible(lo, hi, n, buf,
                    [&](TransferGraph::Code, const std::vector<uint32_t>&,
                        const std::vector<uint32_t>&) { ++count; });
    return count;
}

TransferGraph transfer_graph(const SandwichSystem& sys, size_t n, size_t vertex_cap) {
    if (n < 1 || n > 120) throw invalid_input("transfer_graph requires 1 <= n <= 120");
    auto lo = bound_prefix(sys.lower, n + 2);
    auto hi = bound_prefix(sys.upper, n + 2);

    TransferGraph g;
    g.block_len = n;
    using Code = TransferGraph::Code;
    std::vector<Code> edge_to;       // flattened successor codes
    std::vector<uint32_t> edge_cnt;  // per-vertex successor count
    Code mask = (Code(1) << n) - 1;

    DfsBuffers buf(n);
    std::vector<uint32_t> tmp_lo, tmp_hi;
    walk_admissible(lo, hi, n, buf,
                    [&](Code code, const std::vector<uint32_t>& lo_t,
                        const std::vector<uint32_t>& hi_t) {
                        if (g.codes.size() >= vertex_cap)
                            throw resource_limit("transfer_graph vertex cap exceeded");
                        g.codes.push_back(code);
                        uint32_t cnt = 0;
                        for (uint8_t d = 0; d <= 1; ++d) {
                            if (extend_ok(lo, hi, lo_t, hi_t, n, d, tmp_lo, tmp_hi)) {
                                edge_to.push_back(((code << 1) | d) & mask);
                                ++cnt;
                            }
                        }
                        edge_cnt.push_back(cnt);
                    });

    // Resolve successor codes to indices (codes are sorted by construction).
    g.succ_begin.assign(g.codes.size() + 1, 0);
    for (size_t v = 0; v < g.codes.size(); ++v)
        g.succ_begin[v + 1] = g.succ_begin[v] + edge_cnt[v];
    g.succ.resize(edge_to.size());
    for (size_t e = 0; e < edge_to.size(); ++e) {
        auto it = std::lower_bound(g.codes.begin(), g.codes.end(), edge_to[e]);
        if (it == g.codes.end() || *it != edge_to[e])
            throw std::logic_error("successor block missing from vertex set");
        g.succ[e] = static_cast<uint32_t>(it - g.codes.begin());
    }

    // Bi-essential pruning: drop vertices with in- or out-degree zero until
    // a fixed point, using predecessor lists for the reverse direction.
    size_t V = g.codes.size();
    g.alive.assign(V, 1);
    std::vector<uint32_t> outd(V, 0), ind(V, 0);
    for (size_t v = 0; v < V; ++v) {
        outd[v] = g.succ_begin[v + 1] - g.succ_begin[v];
        for (uint32_t e = g.succ_begin[v]; e < g.succ_begin[v + 1]; ++e) ++ind[g.succ[e]];
    }
    std::vector<uint32_t> pred_begin(V + 1, 0), pred(g.succ.size());
    for (size_t v = 0; v < V; ++v) pred_begin[v + 1] = pred_begin[v] + ind[v];
    {
        std::vector<uint32_t> fill(pred_begin.begin(), pred_begin.end() - 1);
        for (size_t v = 0; v < V; ++v)
            for (uint32_t e = g.succ_begin[v]; e < g.succ_begin[v + 1]; ++e)
                pred[fill[g.succ[e]]++] = static_cast<uint32_t>(v);
    }
    std::vector<uint32_t> queue;
    for (size_t v = 0; v < V; ++v)
        if (outd[v] == 0 || ind[v] == 0) queue.push_back(static_cast<uint32_t>(v));
    while (!queue.empty()) {
        uint32_t v = queue.back();
        queue.pop_back();
        if (!g.alive[v]) continue;
        g.alive[v] = 0;
        for (uint32_t e = g.succ_begin[v]; e < g.succ_begin[v + 1]; ++e) {
            uint32_t w = g.succ[e];
            if (g.alive[w] && --ind[w] == 0) queue.push_back(w);
        }
        for (uint32_t e = pred_begin[v]; e < pred_begin[v + 1]; ++e) {
            uint32_t u = pred[e];
            if (g.alive[u] && --outd[u] == 0) queue.push_back(u);
        }
    }
    return g;
}

uint64_t TransferGraph::path_count(size_t k) const {
    size_t V = codes.size();
    std::vector<uint64_t> cnt(V, 1);
    for (size_t step = 0; step < k; ++step) {
        std::vector<uint64_t> nxt(V, 0);
        for (size_t v = 0; v < V; ++v) {
            uint64_t acc = 0;
            for (uint32_t e = succ_begin[v]; e < succ_begin[v + 1]; ++e) acc += cnt[succ[e]];
            nxt[v] = acc;
        }
        cnt.swap(nxt);
    }
    uint64_t total = 0;
    for (uint64_t c : cnt) total += c;
    return total;
}

namespace {

struct SccSpectra {
    std::vector<std::vector<uint32_t>> comps;  // cycling components only
    std::vector<double> lambda, lo, hi;
};

// Tarjan SCC restricted to alive vertices, iterative.
std::vector<std::vector<uint32_t>> strongly_connected(const TransferGraph& g) {
    size_t V = g.codes.size();
    std::vector<int32_t> index(V, -1), low(V, 0);
    std::vector<uint8_t> on_stack(V, 0);
    std::vector<uint32_t> stck;
    std::vector<std::vector<uint32_t>> comps;
    int32_t counter = 0;

    struct Frame {
        uint32_t v;
        uint32_t edge;
    };
    for (size_t root = 0; root < V; ++root) {
        if (!g.alive[root] || index[root] != -1) continue;
        std::vector<Frame> call;
        call.push_back({static_cast<uint32_t>(root), g.succ_begin[root]});
        index[root] = low[root] = counter++;
        stck.push_back(static_cast<uint32_t>(root));
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < g.succ_begin[f.v + 1]) {
                uint32_t w = g.succ[f.edge++];
                if (!g.alive[w]) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stck.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, g.succ_begin[w]});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                uint32_t v = f.v;
                call.pop_back();
                if (low[v] == index[v]) {
                    std::vector<uint32_t> comp;
                    while (true) {
                        uint32_t w = stck.back();
                        stck.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

// Power iteration on A+I with Collatz-Wielandt brackets; adj must be the
// adjacency of one strongly connected component.
void power_iterate(const std::vector<std::vector<uint32_t>>& adj, double tol, double& lambda,
                   double& lo, double& hi) {
    size_t n = adj.size();
    std::vector<double> v(n, 1.0), w(n);
    double best_lo = 0, best_hi = std::numeric_limits<double>::infinity();
    for (size_t iter = 0; iter < 200000; ++iter) {
        double mn = std::numeric_limits<double>::infinity(), mx = 0, top = 0;
        for (size_t i = 0; i < n; ++i) {
            double acc = v[i];
            for (uint32_t e : adj[i]) acc += v[e];
            w[i] = acc;
            double ratio = acc / v[i];
            mn = std::min(mn, ratio);
            mx = std::max(mx, ratio);
            top = std::max(top, acc);
        }
        best_lo = std::max(best_lo, mn);
        best_hi = std::min(best_hi, mx);
        if (best_hi - best_lo < tol * std::max(1.0, best_hi)) {
            lambda = 0.5 * (best_lo + best_hi) - 1.0;
            lo = best_lo - 1.0;
            hi = best_hi - 1.0;
            return;
        }
        for (size_t i = 0; i < n; ++i) v[i] = w[i] / top;
    }
    throw spectral_nonconvergence(best_lo - 1.0, best_hi - 1.0);
}

SccSpectra analyze_components(const TransferGraph& g, double tol) {
    SccSpectra out;
    auto comps = strongly_connected(g);
    for (auto& comp : comps) {
        if (comp.size() == 1) {
            uint32_t v = comp[0];
            bool self_loop = false;
            for (uint32_t e = g.succ_begin[v]; e < g.succ_begin[v + 1]; ++e)
                if (g.succ[e] == v) self_loop = true;
            if (!self_loop) continue;
        }
        // localize adjacency
        std::unordered_map<uint32_t, uint32_t> local;
        local.reserve(comp.size() * 2);
        for (uint32_t i = 0; i < comp.size(); ++i) local.emplace(comp[i], i);
        std::vector<std::vector<uint32_t>> adj(comp.size());
        for (uint32_t i = 0; i < comp.size(); ++i) {
            uint32_t v = comp[i];
            for (uint32_t e = g.succ_begin[v]; e < g.succ_begin[v + 1]; ++e) {
                auto it = local.find(g.succ[e]);
                if (it != local.end()) adj[i].push_back(it->second);
            }
        }
        double lambda = 0, lo = 0, hi = 0;
        power_iterate(adj, tol, lambda, lo, hi);
        out.comps.push_back(comp);
        out.lambda.push_back(lambda);
        out.lo.push_back(lo);
        out.hi.push_back(hi);
    }
    return out;
}

} // namespace

SpectralResult spectral_radius(const TransferGraph& g, double tol) {
    SpectralResult r;
    auto spectra = analyze_components(g, tol);
    if (spectra.comps.empty()) return r;
    size_t best = 0;
    for (size_t i = 1; i < spectra.comps.size(); ++i)
        if (spectra.lambda[i] > spectra.lambda[best]) best = i;
    r.lambda = spectra.lambda[best];
    r.max_scc = spectra.comps[best];
    r.lo = 0;
    r.hi = 0;
    for (size_t i = 0; i < spectra.comps.size(); ++i) {
        r.lo = std::max(r.lo, spectra.lo[i]);
        r.hi = std::max(r.hi, spectra.hi[i]);
    }
    return r;
}

SpectralResult spectral_radius_adj(const std::vector<std::vector<uint32_t>>& adj, double tol) {
    SpectralResult r;
    if (adj.empty()) return r;
    double lambda = 0, lo = 0, hi = 0;
    power_iterate(adj, tol, lambda, lo, hi);
    r.lambda = lambda;
    r.lo = lo;
    r.hi = hi;
    return r;
}

namespace {

// Periodic word spelled by a cycle inside one SCC.
BinaryWord scc_cycle_word(const TransferGraph& g, const std::vector<uint32_t>& scc) {
    std::unordered_map<uint32_t, uint32_t> pos;
    auto in_comp = [&](uint32_t v) {
        return std::binary_search(scc.begin(), scc.end(), v);
    };
    std::vector<uint32_t> path;
    uint32_t cur = scc[0];
    while (pos.find(cur) == pos.end()) {
        pos.emplace(cur, static_cast<uint32_t>(path.size()));
        path.push_back(cur);
        uint32_t nxt = cur;
        bool found = false;
        for (uint32_t e = g.succ_begin[cur]; e < g.succ_begin[cur + 1]; ++e) {
            if (in_comp(g.succ[e])) {
                nxt = g.succ[e];
                found = true;
                break;
            }
        }
        if (!found) return BinaryWord{};  // defensive: should not happen
        cur = nxt;
    }
    uint32_t start = pos[cur];
    std::vector<uint8_t> word;
    for (size_t i = start; i < path.size(); ++i) {
        uint32_t nxt = (i + 1 < path.size()) ? path[i + 1] : cur;
        word.push_back(static_cast<uint8_t>(g.codes[nxt] & 1));
    }
    return BinaryWord(std::move(word));
}

bool cycle_in_sandwich(const SandwichSystem& sys, const BinaryWord& word) {
    if (word.empty()) return false;
    EpSeq c({}, word);
    size_t span = c.period().size();
    for (size_t n = 0; n < span; ++n) {
        EpSeq s = c.shifted(n);
        if (compare_lex(s, sys.lower) < 0) return false;
        if (compare_lex(s, sys.upper) > 0) return false;
    }
    return true;
}

DimensionResult zero_result(size_t block_len, bool empty) {
    DimensionResult r;
    r.block_len_used = block_len;
    r.converged = true;
    r.empty = empty;
    return r;
}

} // namespace

DimensionResult entropy(const SandwichSystem& sys, const DimOptions& opts) {
    size_t k = sys.lower.period().size();
    size_t p = sys.lower.preperiod().size();
    size_t n_start = opts.n_start ? opts.n_start : std::max<size_t>(2, p + k);
    if (n_start > opts.n_max) n_start = opts.n_max;

    DimensionResult r;
    bool have_result = false;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (size_t n = n_start; n <= opts.n_max; n += k) {
        TransferGraph g;
        try {
            g = transfer_graph(sys, n, opts.vertex_cap);
        } catch (const resource_limit&) {
            // Window deepening ran out of budget: report the last bracket.
            if (have_result) {
                r.converged = false;
                return r;
            }
            throw;
        }
        if (g.vertex_count() == 0) return zero_result(n, true);
        SpectralResult sr = spectral_radius(g, std::min(opts.tol * 1e-3, 1e-13));
        if (sr.lambda <= 0) return zero_result(n, false);
        double h = std::log(sr.lambda);
        r.value = h;
        r.entropy = h;
        r.upper_bound = std::log(sr.hi);
        r.block_len_used = n;
        BinaryWord cyc = scc_cycle_word(g, sr.max_scc);
        r.cycle_validated = cycle_in_sandwich(sys, cyc);
        r.lower_witness = r.cycle_validated ? std::log(std::max(sr.lo, 1.0)) : 0.0;
        have_result = true;
        if (!std::isnan(prev) && std::abs(h - prev) < opts.tol) {
            r.converged = true;
            return r;
        }
        prev = h;
    }
    r.converged = false;
    return r;
}

DimensionResult dim_survivor(const Rational& t, const RhoParams& p, const DimOptions& opts) {
    if (t < Rational(0) || t > Rational(1)) throw invalid_input("dim_survivor requires t in [0,1]");
    SandwichSystem sys = SandwichSystem::from_beta(delta(t, p));
    DimensionResult r = entropy(sys, opts);
    double d = p.neg_log_rho();
    r.value /= d;
    r.upper_bound /= d;
    r.lower_witness /= d;
    return r;
}

LambdaNCheck lambda_N_dimension(size_t N, const RhoParams& p) {
    if (N < 2) throw invalid_input("lambda_N_dimension requires N >= 2");
    if (N > 10) throw resource_limit("lambda_N_dimension guard: N <= 10");
    size_t M = (size_t(1) << N) - 2;
    LambdaNCheck out;
    out.closed_form = std::log(static_cast<double>(M)) / (N * p.neg_log_rho());
    // Aligned-block automaton: one step consumes a full N-block; any allowed
    // block may follow any other, so the graph is complete on M vertices.
    std::vector<std::vector<uint32_t>> adj(M);
    for (size_t i = 0; i < M; ++i) {
        adj[i].resize(M);
        for (size_t j = 0; j < M; ++j) adj[i][j] = static_cast<uint32_t>(j);
    }
    SpectralResult sr = spectral_radius_adj(adj);
    out.engine = std::log(sr.lambda) / (N * p.neg_log_rho());
    return out;
}

DimensionResult dim_cylinder(const SandwichSystem& sys, const BinaryWord& prefix, size_t n,
                             const RhoParams& p, double tol) {
    if (prefix.size() > n) throw invalid_input("dim_cylinder requires |prefix| <= n");
    TransferGraph g = transfer_graph(sys, n);
    DimensionResult r;
    r.block_len_used = n;
    if (g.vertex_count() == 0) {
        r.converged = true;
        r.empty = true;
        return r;
    }
    // Vertices whose block starts with prefix form a contiguous code range.
    TransferGraph::Code pcode = 0;
    for (size_t i = 0; i < prefix.size(); ++i) pcode = (pcode << 1) | prefix[i];
    TransferGraph::Code lo_code = pcode << (n - prefix.size());
    TransferGraph::Code hi_code = ((pcode + 1) << (n - prefix.size())) - 1;
    auto first = std::lower_bound(g.codes.begin(), g.codes.end(), lo_code);
    auto last = std::upper_bound(g.codes.begin(), g.codes.end(), hi_code);
    std::vector<uint8_t> reach(g.vertex_count(), 0);
    std::vector<uint32_t> queue;
    for (auto it = first; it != last; ++it) {
        uint32_t v = static_cast<uint32_t>(it - g.codes.begin());
        reach[v] = 1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        uint32_t v = queue.back();
        queue.pop_back();
        for (uint32_t e = g.succ_begin[v]; e < g.succ_begin[v + 1]; ++e) {
            uint32_t w = g.succ[e];
            if (!reach[w]) {
                reach[w] = 1;
                queue.push_back(w);
            }
        }
    }
    auto spectra = analyze_components(g, tol);
    double lambda = 0, lo = 0, hi = 0;
    bool any = false;
    for (size_t i = 0; i < spectra.comps.size(); ++i) {
        if (!reach[spectra.comps[i][0]]) continue;
        any = true;
        if (spectra.lambda[i] > lambda) lambda = spectra.lambda[i];
        lo = std::max(lo, spectra.lo[i]);
        hi = std::max(hi, spectra.hi[i]);
    }
    if (!any || lambda <= 0) {
        r.converged = true;
        return r;
    }
    double d = p.neg_log_rho();
    r.entropy = std::log(lambda);
    r.value = r.entropy / d;
    r.upper_bound = std::log(hi) / d;
    r.lower_witness = std::log(std::max(lo, 1.0)) / d;
    r.converged = true;
    return r;
}

} // namespace cantor
