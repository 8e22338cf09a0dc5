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
#include <functional>
#include <iosfwd>

#include "spinhalf/singlet.hpp"

namespace spinhalf {

/// A setting pair's partition of the sample space [0, 1) under the uniform
/// density: interval k has length equal to the joint weight of outcome pair k.
/// The sample space and density are a modeling choice (the minimal one in
/// which interval measure equals statistical weight); the interval *order* is
/// the fixed outcome order (+,-), (-,+), (+,+), (-,-).
///
/// Intervals are half-open [t_{k-1}, t_k); zero-length intervals are legal
/// and never selected. boundaries[4] is pinned to exactly 1.
struct PartitionModel {
    Direction setting_a;
    Direction setting_b;
    std::array<double, 5> boundaries;
    std::array<int, 4> alpha;  // outcome labels per interval, particle 1
    std::array<int, 4> beta;   // outcome labels per interval, particle 2
};

struct SampleRecord {
    double lambda;  // in [0, 1)
    int k;          // interval index 1..4
    int alpha;      // +1 or -1
    int beta;       // +1 or -1
};

struct Classification {
    int k;
    int alpha;
    int beta;
};

struct RunSummary {
    Direction setting_a;
    Direction setting_b;
    long long n = 0;
    double mean_product = 0.0;  // estimates -a.b
    double std_err = 0.0;
    std::array<long long, 4> counts{};
    std::array<double, 4> empirical_weights{};  // counts / n
    std::uint64_t seed = 0;
    long long chunk_size = 0;
};

struct ZReport {
    std::array<double, 4> z{};
    double max_abs_z = 0.0;
    bool flagged = false;  // any |z| > 4
};

struct SampleOptions {
    long long chunk_size = 1 << 16;
    int workers = 1;
};

PartitionModel build_partition(const Direction& a, const Direction& b);

/// Interval lookup for lambda in [0, 1); lambda outside the domain is an
/// input error. Deterministic: the unique interval [t_{k-1}, t_k) containing
/// lambda, skipping zero-length intervals.
Classification classify(double lambda, const PartitionModel& p);

/// Draws n uniform lambda values from the counter-based SplitMix64 generator
/// (see rng.hpp) and tallies the partition outcomes. Identical
/// (a, b, n, seed) give bit-identical results for any worker count; the
/// chunk layout is recorded in the summary. When a sink is supplied the run
/// is sequential and the sink sees every record in draw order.
RunSummary sample_run(const Direction& a, const Direction& b, long long n,
                      std::uint64_t seed, const SampleOptions& opt = {},
                      const std::function<void(const SampleRecord&)>& sink = {});

/// Per-interval z-scores of the empirical weights against the partition's
/// exact interval lengths. The summary must have been produced against the
/// same settings.
ZReport empirical_vs_exact(const RunSummary& summary, const PartitionModel& p);

/// Sample dump format: header `lambda,k,alpha,beta`, one row per record,
/// floats with 17 significant digits.
void write_sample_csv_header(std::ostream& os);
void write_sample_csv_row(std::ostream& os, const SampleRecord& rec);

}  // namespace spinhalf
