// Copyright 2026 The spinhalf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "spinhalf/ensemble.hpp"

namespace spinhalf {

/// The four analyzer orientations of an S-value experiment.
struct ChshSetting {
    Direction a;
    Direction a_prime;
    Direction b;
    Direction b_prime;
};

struct SampledS {
    double value = 0.0;
    double std_err = 0.0;  // per-pair errors combined in quadrature
    long long n_per_pair = 0;
    std::uint64_t seed = 0;
};

/// S = C(a,b) + C(a,b') + C(a',b) - C(a',b'); the sign pattern is fixed.
struct ChshResult {
    double s_quantum = 0.0;
    std::array<double, 4> per_pair{};  // C(a,b), C(a,b'), C(a',b), C(a',b')
    std::optional<SampledS> sampled;
};

/// One fixed assignment (alpha, alpha', beta, beta') and its combination
/// value alpha*beta + alpha*beta' + alpha'*beta - alpha'*beta'.
struct BoundTableRow {
    int alpha, alpha_prime, beta, beta_prime;
    int value;
};

struct BoundReport {
    std::array<BoundTableRow, 16> rows;
    int max_abs = 0;
    bool only_pm2 = false;  // every combination value is -2 or +2
};

/// Direction at angle gamma from +z in the x-z plane: (sin g, 0, cos g).
Direction planar_direction(double gamma);

/// Planar setting a=0, a'=pi/2, b=pi/4, b'=-pi/4, where |S| reaches 2*sqrt(2).
ChshSetting optimal_setting();

ChshResult chsh_quantum(const ChshSetting& s);

/// Exhaustive check over the 16 fixed +/-1 assignments drawn from one sample
/// space: the combination value is always exactly -2 or +2. The sampled
/// experiment below, in contrast, uses a separate partition per setting pair,
/// so this bound does not constrain it.
BoundReport noncontextual_bound_check();

/// Runs four independent partitioned sampling experiments (one per setting
/// pair, each with its own derived sub-seed) and combines the four mean
/// products with the fixed sign pattern.
ChshResult chsh_sampled(const ChshSetting& s, long long n_per_pair, std::uint64_t seed,
                        const SampleOptions& opt = {});

struct SweepRow {
    double b_angle;
    double b_prime_angle;
    double s;
};

struct SweepResult {
    double step;
    std::vector<SweepRow> rows;  // grid over [-pi, pi) x [-pi, pi)
    SweepRow argmax;             // grid node maximizing |S|
};

/// Quantum S over a planar grid of (b, b') angles with a = 0 and a' = pi/2
/// fixed. step must be in (0, pi/4]. The singlet S depends only on pairwise
/// angles, so the planar slice contains the extremum.
SweepResult sweep_planar(double step);

/// CSV: header `b_angle,b_prime_angle,S`, radians and dimensionless S,
/// 17 significant digits.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

}  // namespace spinhalf
