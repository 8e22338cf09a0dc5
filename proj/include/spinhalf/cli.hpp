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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinhalf/chsh.hpp"
#include "spinhalf/verify.hpp"

namespace spinhalf::cli {

enum class Command { verify, correlate, probs, sample, chsh, sweep };
enum class Format { text, json, csv };

/// Validated invocation. Direction fields are only populated for the
/// commands that use them.
struct RunConfig {
    Command command = Command::verify;
    Format format = Format::text;

    std::optional<Direction> a;
    std::optional<Direction> a_prime;
    std::optional<Direction> b;
    std::optional<Direction> b_prime;
    std::optional<Direction> r;

    long long samples = 0;
    std::uint64_t seed = 0;
    long long chunk_size = 1 << 16;
    int workers = 1;
    double tolerance = 0.0;  // verify: overrides stated bounds when > 0
    int trials = 1000;       // verify
    std::uint64_t verify_seed = VerifyOptions{}.seed;
    double step = 0.0;       // sweep
    std::string out_path;    // sweep table destination
    std::string dump_path;   // sample record stream destination
};

/// "z", "x", or a "theta,phi" radian pair.
Direction parse_direction(const std::string& text);

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace spinhalf::cli
