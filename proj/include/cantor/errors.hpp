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

#include <stdexcept>
#include <string>

namespace cantor {

// Error taxonomy used by the CLI exit-code mapping:
//   invalid_input / domain-type errors -> exit 4
//   resource_limit                     -> exit 3
//   usage problems (bad flags, parse)  -> exit 2

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x lies in a removed gap of the Cantor set; `level` is the recursion depth
// at which the gap was hit.
struct not_in_cantor_set : std::domain_error {
    explicit not_in_cantor_set(int level_)
        : std::domain_error("point is not in the Cantor set (gap at level " +
                            std::to_string(level_) + ")"),
          level(level_) {}
    int level;
};

struct outside_domain : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_in_gamma : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_quasi_greedy : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_in_image : std::domain_error {
    using std::domain_error::domain_error;
};

// Power iteration failed to tighten its bracket; carries the last bounds.
struct spectral_nonconvergence : std::runtime_error {
    spectral_nonconvergence(double lo_, double hi_)
        : std::runtime_error("spectral radius bracket did not converge"),
          lo(lo_), hi(hi_) {}
    double lo, hi;
};

} // namespace cantor
