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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinhalf/quadrature.hpp"

using namespace spinhalf;

TEST_CASE("Gauss-Legendre nodes and weights") {
    for (int n : {1, 2, 5, 16, 64}) {
        const GaussLegendre gl = gauss_legendre(n);
        REQUIRE(gl.nodes.size() == static_cast<std::size_t>(n));

        double weight_sum = 0.0;
        for (double w : gl.weights) weight_sum += w;
        CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));

        // rule is exact for monomials up to degree 2n-1
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double integral = 0.0;
            for (int i = 0; i < n; ++i) integral += gl.weights[i] * std::pow(gl.nodes[i], k);
            const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
            CHECK(std::abs(integral - exact) <= 1e-13);
        }
    }
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("sphere averages of simple integrands") {
    const auto one = [](const Direction&) { return 1.0; };
    const auto zsq = [](const Direction& d) { return d.cartesian().z * d.cartesian().z; };
    const auto xsq = [](const Direction& d) { return d.cartesian().x * d.cartesian().x; };
    const auto zlin = [](const Direction& d) { return d.cartesian().z; };

    CHECK(sphere_average(one) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sphere_average(zsq) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(sphere_average(xsq) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(std::abs(sphere_average(zlin)) <= 1e-14);

    // coarse grids already integrate low-degree integrands exactly
    CHECK(sphere_average(zsq, 4, 8) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("Monte Carlo sphere average") {
    const auto zsq = [](const Direction& d) { return d.cartesian().z * d.cartesian().z; };
    const MonteCarloEstimate est = sphere_average_mc(zsq, 100000, 7);
    CHECK(est.n == 100000);
    CHECK(est.std_err > 0.0);
    CHECK(std::abs(est.value - 1.0 / 3.0) <= 4.0 * est.std_err);

    // identical seeds give identical estimates
    const MonteCarloEstimate again = sphere_average_mc(zsq, 100000, 7);
    CHECK(est.value == again.value);
    CHECK(est.std_err == again.std_err);

    const MonteCarloEstimate other = sphere_average_mc(zsq, 100000, 8);
    CHECK(est.value != other.value);

    CHECK_THROWS_AS(sphere_average_mc(zsq, 0, 1), std::invalid_argument);
}
