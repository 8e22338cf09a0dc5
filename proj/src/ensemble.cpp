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

#include "spinhalf/ensemble.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spinhalf/rng.hpp"

namespace spinhalf {

namespace {

constexpr std::array<int, 4> kAlpha = {+1, -1, +1, -1};
constexpr std::array<int, 4> kBeta = {-1, +1, +1, -1};

bool same_setting(const Direction& x, const Direction& y) {
    return max_abs_diff(x.cartesian(), y.cartesian()) <= 1e-12;
}

std::array<long long, 4> tally_range(const PartitionModel& p, std::uint64_t seed,
                                     long long begin, long long end) {
    std::array<long long, 4> counts{};
    for (long long j = begin; j < end; ++j) {
        const double lambda = rng::uniform_at(seed, static_cast<std::uint64_t>(j));
        counts[classify(lambda, p).k - 1] += 1;
    }
    return counts;
}

}  // namespace

PartitionModel build_partition(const Direction& a, const Direction& b) {
    const JointDistribution jd = joint_distribution(a, b);
    PartitionModel p{a, b, {}, kAlpha, kBeta};
    p.boundaries[0] = 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        acc += jd.weights[k];
        p.boundaries[k + 1] = std::min(acc, 1.0);
    }
    p.boundaries[4] = 1.0;  // total measure is 1 by definition
    return p;
}

Classification classify(double lambda, const PartitionModel& p) {
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw std::invalid_argument("lambda out of range [0, 1)");
    for (int k = 0; k < 4; ++k) {
        if (lambda < p.boundaries[k + 1]) return {k + 1, p.alpha[k], p.beta[k]};
    }
    // unreachable: boundaries[4] == 1 and lambda < 1
    throw std::logic_error("classify: no interval found");
}

RunSummary sample_run(const Direction& a, const Direction& b, long long n,
                      std::uint64_t seed, const SampleOptions& opt,
                      const std::function<void(const SampleRecord&)>& sink) {
    if (n < 1) throw std::invalid_argument("sample_run: n must be >= 1");
    if (opt.chunk_size < 1) throw std::invalid_argument("sample_run: chunk_size must be >= 1");
    if (opt.workers < 1) throw std::invalid_argument("sample_run: workers must be >= 1");

    const PartitionModel p = build_partition(a, b);
    std::array<long long, 4> counts{};

    if (sink) {
        for (long long j = 0; j < n; ++j) {
            const double lambda = rng::uniform_at(seed, static_cast<std::uint64_t>(j));
            const Classification c = classify(lambda, p);
            counts[c.k - 1] += 1;
            sink(SampleRecord{lambda, c.k, c.alpha, c.beta});
        }
    } else {
        const long long n_chunks = (n + opt.chunk_size - 1) / opt.chunk_size;
        const int workers = static_cast<int>(std::min<long long>(opt.workers, n_chunks));
        if (workers == 1) {
            counts = tally_range(p, seed, 0, n);
        } else {
            // Chunks are independent index ranges of the counter stream, so
            // integer merges are identical for any assignment of chunks to
            // workers.
            std::vector<std::array<long long, 4>> partial(workers, std::array<long long, 4>{});
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w]() {
                    for (long long c = w; c < n_chunks; c += workers) {
                        const long long begin = c * opt.chunk_size;
                        const long long end = std::min(n, begin + opt.chunk_size);
                        const auto local = tally_range(p, seed, begin, end);
                        for (int k = 0; k < 4; ++k) partial[w][k] += local[k];
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (int w = 0; w < workers; ++w)
                for (int k = 0; k < 4; ++k) counts[k] += partial[w][k];
        }
    }

    RunSummary s{a, b};
    s.n = n;
    s.counts = counts;
    s.seed = seed;
    s.chunk_size = opt.chunk_size;
    long long product_sum = 0;
    for (int k = 0; k < 4; ++k) {
        product_sum += static_cast<long long>(kAlpha[k] * kBeta[k]) * counts[k];
        s.empirical_weights[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
    }
    s.mean_product = static_cast<double>(product_sum) / static_cast<double>(n);
    // products are +/-1, so the sample variance is n(1-m^2)/(n-1)
    s.std_err = n > 1 ? std::sqrt(std::max(0.0, 1.0 - s.mean_product * s.mean_product) /
                                  static_cast<double>(n - 1))
                      : 0.0;
    return s;
}

ZReport empirical_vs_exact(const RunSummary& summary, const PartitionModel& p) {
    if (!same_setting(summary.setting_a, p.setting_a) ||
        !same_setting(summary.setting_b, p.setting_b))
        throw std::invalid_argument("empirical_vs_exact: summary and partition settings differ");
    ZReport r;
    for (int k = 0; k < 4; ++k) {
        const double exact = p.boundaries[k + 1] - p.boundaries[k];
        const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(summary.n));
        const double diff = summary.empirical_weights[k] - exact;
        if (se > 0.0)
            r.z[k] = diff / se;
        else
            r.z[k] = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        r.max_abs_z = std::max(r.max_abs_z, std::abs(r.z[k]));
    }
    r.flagged = r.max_abs_z > 4.0;
    return r;
}

void write_sample_csv_header(std::ostream& os) { os << "lambda,k,alpha,beta\n"; }

void write_sample_csv_row(std::ostream& os, const SampleRecord& rec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g,%d,%d,%d\n", rec.lambda, rec.k, rec.alpha, rec.beta);
    os << buf;
}

}  // namespace spinhalf
