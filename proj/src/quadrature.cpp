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

#include "spinhalf/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinhalf/rng.hpp"

namespace spinhalf {

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    return gl;
}

double sphere_average(const std::function<double(const Direction&)>& f,
                      int theta_nodes, int phi_nodes) {
    if (theta_nodes < 1 || phi_nodes < 1)
        throw std::invalid_argument("sphere_average: node counts must be >= 1");
    const GaussLegendre gl = gauss_legendre(theta_nodes);
    const double dphi = 2.0 * std::numbers::pi / phi_nodes;
    // dOmega/4pi = (dcos(theta)/2) * (dphi/2pi)
    double acc = 0.0;
    for (int i = 0; i < theta_nodes; ++i) {
        const double theta = std::acos(clamp_unit(gl.nodes[i]));
        double ring = 0.0;
        for (int j = 0; j < phi_nodes; ++j) ring += f(Direction(theta, j * dphi));
        acc += 0.5 * gl.weights[i] * (ring / phi_nodes);
    }
    return acc;
}

MonteCarloEstimate sphere_average_mc(const std::function<double(const Direction&)>& f,
                                     long long n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sphere_average_mc: n must be >= 1");
    double sum = 0.0, sumsq = 0.0;
    for (long long i = 0; i < n; ++i) {
        const double z = 2.0 * rng::uniform_at(seed, 2 * static_cast<std::uint64_t>(i)) - 1.0;
        double phi =
            2.0 * std::numbers::pi * rng::uniform_at(seed, 2 * static_cast<std::uint64_t>(i) + 1);
        // 2pi * u can round up to 2pi itself for u just below 1
        if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
        const double v = f(Direction(std::acos(clamp_unit(z)), phi));
        sum += v;
        sumsq += v * v;
    }
    MonteCarloEstimate est;
    est.n = n;
    est.value = sum / n;
    if (n > 1) {
        const double var = (sumsq - n * est.value * est.value) / (n - 1);
        est.std_err = std::sqrt(std::max(var, 0.0) / n);
    }
    return est;
}

}  // namespace spinhalf
