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
#include <functional>
#include <vector>

#include "spinhalf/spin.hpp"

namespace spinhalf {

/// Gauss-Legendre nodes and weights on [-1, 1]; exact for polynomials of
/// degree up to 2n-1.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Average of f over the unit sphere under the normalized measure dOmega/4pi,
/// on a product grid: Gauss-Legendre in cos(theta) times a uniform periodic
/// rule in phi. Summation order is fixed by node index.
double sphere_average(const std::function<double(const Direction&)>& f,
                      int theta_nodes = 64, int phi_nodes = 128);

struct MonteCarloEstimate {
    double value = 0.0;
    double std_err = 0.0;
    long long n = 0;
};

/// Same average estimated from n uniform directions drawn from the
/// counter-based generator; reproducible for a fixed seed.
MonteCarloEstimate sphere_average_mc(const std::function<double(const Direction&)>& f,
                                     long long n, std::uint64_t seed);

}  // namespace spinhalf
