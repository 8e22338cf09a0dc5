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

#include "spinhalf/chsh.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "spinhalf/rng.hpp"

namespace spinhalf {

Direction planar_direction(double gamma) {
    if (!std::isfinite(gamma)) throw std::invalid_argument("planar angle must be finite");
    return Direction::from_cartesian(Vec3{std::sin(gamma), 0.0, std::cos(gamma)});
}

ChshSetting optimal_setting() {
    return ChshSetting{
        planar_direction(0.0),
        planar_direction(std::numbers::pi / 2.0),
        planar_direction(std::numbers::pi / 4.0),
        planar_direction(-std::numbers::pi / 4.0),
    };
}

ChshResult chsh_quantum(const ChshSetting& s) {
    ChshResult r;
    r.per_pair = {
        correlation(s.a, s.b),
        correlation(s.a, s.b_prime),
        correlation(s.a_prime, s.b),
        correlation(s.a_prime, s.b_prime),
    };
    r.s_quantum = r.per_pair[0] + r.per_pair[1] + r.per_pair[2] - r.per_pair[3];
    return r;
}

BoundReport noncontextual_bound_check() {
    BoundReport report;
    std::size_t i = 0;
    bool only_pm2 = true;
    for (int alpha : {+1, -1})
        for (int alpha_prime : {+1, -1})
            for (int beta : {+1, -1})
                for (int beta_prime : {+1, -1}) {
                    const int value = alpha * beta + alpha * beta_prime +
                                      alpha_prime * beta - alpha_prime * beta_prime;
                    report.rows[i++] = {alpha, alpha_prime, beta, beta_prime, value};
                    report.max_abs = std::max(report.max_abs, std::abs(value));
                    only_pm2 = only_pm2 && (value == 2 || value == -2);
                }
    report.only_pm2 = only_pm2;
    return report;
}

ChshResult chsh_sampled(const ChshSetting& s, long long n_per_pair, std::uint64_t seed,
                        const SampleOptions& opt) {
    if (n_per_pair < 1) throw std::invalid_argument("chsh_sampled: n_per_pair must be >= 1");
    ChshResult r = chsh_quantum(s);

    // Each pair owns its own partition of the sample space; the four runs are
    // never merged under a single partition.
    const std::array<std::pair<const Direction*, const Direction*>, 4> pairs = {{
        {&s.a, &s.b},
        {&s.a, &s.b_prime},
        {&s.a_prime, &s.b},
        {&s.a_prime, &s.b_prime},
    }};
    std::array<double, 4> mean{};
    double var_sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const RunSummary run = sample_run(*pairs[i].first, *pairs[i].second, n_per_pair,
                                          rng::derive_seed(seed, i), opt);
        mean[i] = run.mean_product;
        var_sum += run.std_err * run.std_err;
    }
    SampledS sampled;
    sampled.value = mean[0] + mean[1] + mean[2] - mean[3];
    sampled.std_err = std::sqrt(var_sum);
    sampled.n_per_pair = n_per_pair;
    sampled.seed = seed;
    r.sampled = sampled;
    return r;
}

SweepResult sweep_planar(double step) {
    if (!(step > 0.0) || step > std::numbers::pi / 4.0 || !std::isfinite(step))
        throw std::invalid_argument("sweep step must be in (0, pi/4]");
    const Direction a = planar_direction(0.0);
    const Direction a_prime = planar_direction(std::numbers::pi / 2.0);

    const long long count =
        static_cast<long long>(std::floor(2.0 * std::numbers::pi / step + 1e-9));
    std::vector<double> angle(count), c_a(count), c_ap(count);
    for (long long i = 0; i < count; ++i) {
        angle[i] = -std::numbers::pi + static_cast<double>(i) * step;
        const Direction d = planar_direction(angle[i]);
        c_a[i] = correlation(a, d);
        c_ap[i] = correlation(a_prime, d);
    }

    SweepResult sweep{step, {}, {0.0, 0.0, 0.0}};
    sweep.rows.reserve(static_cast<std::size_t>(count * count));
    double best = -1.0;
    for (long long i = 0; i < count; ++i) {
        for (long long j = 0; j < count; ++j) {
            const double s = c_a[i] + c_a[j] + c_ap[i] - c_ap[j];
            sweep.rows.push_back({angle[i], angle[j], s});
            if (std::abs(s) > best) {
                best = std::abs(s);
                sweep.argmax = {angle[i], angle[j], s};
            }
        }
    }
    return sweep;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "b_angle,b_prime_angle,S\n";
    char buf[128];
    for (const SweepRow& row : sweep.rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", row.b_angle, row.b_prime_angle,
                      row.s);
        os << buf;
    }
}

}  // namespace spinhalf
