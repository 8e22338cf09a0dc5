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

#include <numbers>

#include "random_inputs.hpp"
#include "spinhalf/spin.hpp"

using namespace spinhalf;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

TEST_CASE("Direction construction and domains") {
    const Direction d(kPi / 3.0, kPi / 4.0);
    CHECK(d.cartesian().x ==
          doctest::Approx(std::sin(kPi / 3.0) * std::cos(kPi / 4.0)).epsilon(1e-15));
    CHECK(d.cartesian().z == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(norm(d.cartesian()) == doctest::Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(Direction(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Direction(kPi + 0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Direction(0.5, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Direction(0.5, 2.0 * kPi), std::invalid_argument);
    CHECK_THROWS_AS(Direction(std::nan(""), 0.0), std::invalid_argument);

    SUBCASE("from_cartesian tolerates 1e-9 round-trip noise and no more") {
        const Direction z = Direction::from_cartesian({0.0, 0.0, 1.0 + 5e-10});
        CHECK(z.theta() <= 1e-7);  // acos roundoff near the pole
        CHECK_THROWS_AS(Direction::from_cartesian({0.0, 0.0, 1.1}), std::invalid_argument);
        CHECK_THROWS_AS(Direction::from_cartesian({0.0, 0.0, 0.0}), std::invalid_argument);

        testing::Stream s(21);
        for (int t = 0; t < 200; ++t) {
            const Direction d0 = s.direction();
            const Direction d1 = Direction::from_cartesian(d0.cartesian());
            CHECK(max_abs_diff(d0.cartesian(), d1.cartesian()) <= 1e-12);
        }
    }
}

TEST_CASE("spherical triad") {
    testing::Stream s(22);
    for (int t = 0; t < 200; ++t) {
        const SphericalTriad tr = triad(s.direction());
        CHECK(norm(tr.theta_hat) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(norm(tr.phi_hat) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(dot(tr.r, tr.theta_hat)) <= 1e-12);
        CHECK(std::abs(dot(tr.r, tr.phi_hat)) <= 1e-12);
        CHECK(std::abs(dot(tr.theta_hat, tr.phi_hat)) <= 1e-12);
        CHECK(max_abs_diff(cross(tr.theta_hat, tr.phi_hat), tr.r) <= 1e-12);
    }
}

TEST_CASE("sigma_dot matrix") {
    CHECK(max_abs_diff(sigma_dot(Direction(0.0, 0.0)), pauli_z()) == 0.0);
    CHECK(max_abs_diff(sigma_dot(Direction(kPi / 2.0, 0.0)), pauli_x()) <= 1e-16);

    testing::Stream s(23);
    for (int t = 0; t < 200; ++t) {
        const CMat2 m = sigma_dot(s.direction());
        CHECK(is_hermitian(m, 1e-15));
        CHECK(std::abs(m.at(0, 0) + m.at(1, 1)) <= 1e-15);  // traceless
        CHECK(max_abs_diff(matmul(m, m), identity<2>()) <= 1e-15);
    }
}

TEST_CASE("spinors along a direction") {
    SUBCASE("poles") {
        CHECK(max_abs_diff(spinor_plus(0.0, 0.0).amplitudes(), cvec2(1.0, 0.0)) == 0.0);
        // cos(pi/2) = 0, sin(pi/2) = 1
        CHECK(max_abs_diff(spinor_plus(kPi, 0.0).amplitudes(), cvec2(0.0, 1.0)) <= 1e-16);
    }
    SUBCASE("angle domain") {
        CHECK_THROWS_AS(spinor_plus(-0.1, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(spinor_minus(0.1, 7.0), std::invalid_argument);
    }
    SUBCASE("orthonormal eigenpair, 1000 random directions") {
        testing::Stream s(24);
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const Direction r = s.direction();
            const CVec2 plus = spinor_plus(r).amplitudes();
            const CVec2 minus = spinor_minus(r).amplitudes();
            worst = std::max(worst, std::abs(inner(plus, minus)));
            const CMat2 op = sigma_dot(r);
            worst = std::max(worst, max_abs_diff(matvec(op, plus), plus));
            worst = std::max(worst, max_abs_diff(matvec(op, minus), cplx{-1.0, 0.0} * minus));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("rotation matrix") {
    CHECK(max_abs_diff(rotation_matrix(0.0, 0.0), identity<2>()) == 0.0);
    // substituting theta = pi/2: (1,0) -> (cos(pi/4), sin(pi/4))
    const CVec2 rotated = matvec(rotation_matrix(kPi / 2.0, 0.0), cvec2(1.0, 0.0));
    CHECK(max_abs_diff(rotated, cvec2(kInvSqrt2, kInvSqrt2)) <= 1e-15);

    testing::Stream s(25);
    for (int t = 0; t < 200; ++t) {
        const Direction d = s.direction();
        const CMat2 u = rotation_matrix(d.theta(), d.phi());
        CHECK(is_unitary(u, 1e-12));
        CHECK(max_abs_diff(matvec(u, cvec2(1.0, 0.0)), spinor_plus(d).amplitudes()) == 0.0);
    }
}

TEST_CASE("projection expectation value") {
    const Direction z(0.0, 0.0);
    CHECK(expectation_projection(spinor_plus(z), z) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(expectation_projection(spinor_plus(z), Direction(kPi / 2.0, 0.0))) <= 1e-15);
    // cos(pi/3) = 0.5
    CHECK(expectation_projection(spinor_plus(z), Direction(kPi / 3.0, 0.0)) ==
          doctest::Approx(0.5).epsilon(1e-14));

    testing::Stream s(26);
    for (int t = 0; t < 300; ++t) {
        const Direction r = s.direction();
        const Direction a = s.direction();
        const double ra = dot(r.cartesian(), a.cartesian());
        CHECK(expectation_projection(spinor_plus(r), a) == doctest::Approx(ra).epsilon(1e-12));
        CHECK(expectation_projection(spinor_minus(r), a) == doctest::Approx(-ra).epsilon(1e-12));
    }
}

TEST_CASE("Bloch vector") {
    CHECK(max_abs_diff(bloch_vector(Spinor(cvec2(1.0, 0.0))), Vec3{0.0, 0.0, 1.0}) == 0.0);
    CHECK(max_abs_diff(bloch_vector(Spinor(cvec2(0.0, 1.0))), Vec3{0.0, 0.0, -1.0}) == 0.0);
    // equal superposition points along +x
    CHECK(max_abs_diff(bloch_vector(Spinor(cvec2(kInvSqrt2, kInvSqrt2))),
                       Vec3{1.0, 0.0, 0.0}) <= 1e-15);

    testing::Stream s(27);
    for (int t = 0; t < 300; ++t) {
        const Direction d = s.direction();
        CHECK(max_abs_diff(bloch_vector(spinor_plus(d)), d.cartesian()) <= 1e-12);
        CHECK(max_abs_diff(bloch_vector(spinor_minus(d)), -d.cartesian()) <= 1e-12);
        CHECK(norm(bloch_vector(spinor_plus(d))) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("off-diagonal element") {
    const Direction z(0.0, 0.0);
    const Direction x(kPi / 2.0, 0.0);
    SUBCASE("pinned values") {
        // triad at theta=0, phi=0: theta_hat = +x, phi_hat = +y
        CHECK(std::abs(off_diagonal(z, x) - cplx{1.0, 0.0}) <= 1e-15);
        CHECK(std::abs(off_diagonal(z, z)) <= 1e-15);
        CHECK(std::abs(std::abs(off_diagonal(z, x)) - 1.0) <= 1e-15);
    }
    SUBCASE("matches the triad expression") {
        testing::Stream s(28);
        for (int t = 0; t < 300; ++t) {
            const Direction r = s.direction();
            const Direction a = s.direction();
            const SphericalTriad tr = triad(r);
            const cplx expected =
                std::polar(1.0, r.phi()) *
                cplx{dot(tr.theta_hat, a.cartesian()), dot(tr.phi_hat, a.cartesian())};
            CHECK(std::abs(off_diagonal(r, a) - expected) <= 1e-12);
        }
    }
    SUBCASE("modulus and completeness laws") {
        testing::Stream s(29);
        for (int t = 0; t < 1000; ++t) {
            const Direction r = s.direction();
            const Direction a = s.direction();
            const cplx od = off_diagonal(r, a);
            const double ra = dot(r.cartesian(), a.cartesian());
            CHECK(std::abs(std::abs(od) - std::sin(std::acos(clamp_unit(ra)))) <= 1e-9);
            CHECK(std::abs(std::abs(od) - norm(cross(r.cartesian(), a.cartesian()))) <= 1e-9);
            CHECK(std::norm(od) + ra * ra == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("Bloch reflection") {
    const Direction z(0.0, 0.0);
    CHECK(max_abs_diff(reflect_bloch(z, z), Vec3{0.0, 0.0, 1.0}) == 0.0);
    CHECK(max_abs_diff(reflect_bloch(z, Direction(kPi / 2.0, 0.0)), Vec3{0.0, 0.0, -1.0}) <=
          1e-15);
    // a at 45 degrees in the x-z plane: 2 cos(pi/4) a - z = +x
    CHECK(max_abs_diff(reflect_bloch(z, Direction(kPi / 4.0, 0.0)), Vec3{1.0, 0.0, 0.0}) <=
          1e-15);

    testing::Stream s(30);
    for (int t = 0; t < 1000; ++t) {
        const Direction r = s.direction();
        const Direction a = s.direction();
        const Vec3 ra = reflect_bloch(r, a);
        CHECK(norm(ra) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(max_abs_diff(bloch_vector(apply_projection(a, spinor_plus(r))), ra) <= 1e-12);
        // reflecting twice about the same axis restores the original
        CHECK(max_abs_diff(2.0 * dot(ra, a.cartesian()) * a.cartesian() - ra, r.cartesian()) <=
              1e-12);
    }
}

TEST_CASE("applying the projection operator") {
    const Direction z(0.0, 0.0);
    const Direction x(kPi / 2.0, 0.0);
    CHECK(max_abs_diff(apply_projection(z, Spinor(cvec2(1.0, 0.0))).amplitudes(),
                       cvec2(1.0, 0.0)) == 0.0);
    CHECK(max_abs_diff(apply_projection(x, Spinor(cvec2(1.0, 0.0))).amplitudes(),
                       cvec2(0.0, 1.0)) <= 1e-15);

    SUBCASE("componentwise forms and involution") {
        testing::Stream s(31);
        for (int t = 0; t < 300; ++t) {
            const Direction r = s.direction();
            const Direction a = s.direction();
            const double th = r.theta(), ph = r.phi();
            const double ta = a.theta(), pa = a.phi();
            // explicit components of sigma_dot(a)|+_r> and sigma_dot(a)|-_r>
            const CVec2 plus_expected =
                cvec2(std::cos(ta) * std::cos(th / 2.0) +
                          std::sin(ta) * std::polar(std::sin(th / 2.0), ph - pa),
                      std::polar(std::sin(ta), pa) * std::cos(th / 2.0) -
                          std::cos(ta) * std::polar(std::sin(th / 2.0), ph));
            const CVec2 minus_expected =
                cvec2(-std::cos(ta) * std::polar(std::sin(th / 2.0), -ph) +
                          std::polar(std::sin(ta), -pa) * std::cos(th / 2.0),
                      -std::sin(ta) * std::polar(std::sin(th / 2.0), -(ph - pa)) -
                          std::cos(ta) * std::cos(th / 2.0));
            const Spinor plus_proj = apply_projection(a, spinor_plus(r));
            const Spinor minus_proj = apply_projection(a, spinor_minus(r));
            CHECK(max_abs_diff(plus_proj.amplitudes(), plus_expected) <= 1e-12);
            CHECK(max_abs_diff(minus_proj.amplitudes(), minus_expected) <= 1e-12);
            // the pair is orthonormal and the operation is reversible
            CHECK(std::abs(inner(plus_proj.amplitudes(), minus_proj.amplitudes())) <= 1e-12);
            CHECK(max_abs_diff(apply_projection(a, plus_proj).amplitudes(),
                               spinor_plus(r).amplitudes()) <= 1e-12);
        }
    }
}

TEST_CASE("phase-insensitive spinor comparison") {
    const Spinor s0 = spinor_plus(1.0, 2.0);
    const Spinor s1(std::polar(1.0, 0.7) * s0.amplitudes());
    CHECK(equal_up_to_phase(s0, s1, 1e-12));
    CHECK_FALSE(equal_up_to_phase(s0, spinor_minus(1.0, 2.0), 1e-12));
}
