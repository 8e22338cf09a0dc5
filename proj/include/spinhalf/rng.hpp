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

namespace spinhalf::rng {

// Counter-based SplitMix64 generator.
//
// Draw i of the stream with seed s is  finalize(s + (i+1) * GOLDEN), i.e. the
// standard SplitMix64 sequence evaluated at an arbitrary counter. Because a
// draw depends only on (seed, index), any chunking of an index range across
// workers reproduces the same values; substream k of a run is simply the
// index range [k*chunk, (k+1)*chunk).

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGolden);
}

// Uniform double in [0, 1), 53 mantissa bits of the draw.
inline double uniform_at(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(at(seed, index) >> 11) * 0x1.0p-53;
}

// Decorrelated sub-seed for stream `stream` of a run seeded by `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 1));
}

}  // namespace spinhalf::rng
