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

#include "spinhalf/spin.hpp"

#include <numbers>
#include <stdexcept>

namespace spinhalf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_angles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("direction angles must be finite");
    if (theta < 0.0 || theta > std::numbers::pi)
        throw std::invalid_argument("theta out of range [0, pi]");
    if (phi < 0.0 || phi >= kTwoPi)
        throw std::invalid_argument("phi out of range [0, 2*pi)");
}

}  // namespace

Direction::Direction(double theta, double phi) : theta_(theta), phi_(phi) {
    check_angles(theta, phi);
    const double st = std::sin(theta);
    n_ = Vec3{st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Direction Direction::from_cartesian(const Vec3& v) {
    if (!is_finite(v)) throw std::invalid_argument("direction vector must be finite");
    const double n = norm(v);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("direction vector is not unit length");
    const Vec3 u = (1.0 / n) * v;
    const double theta = std::acos(clamp_unit(u.z));
    double phi = std::atan2(u.y, u.x);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;  // atan2(-0, x) rounds up to 2*pi
    return Direction(theta, phi);
}

SphericalTriad triad(const Direction& d) {
    const double ct = std::cos(d.theta());
    const double st = std::sin(d.theta());
    const double cp = std::cos(d.phi());
    const double sp = std::sin(d.phi());
    return SphericalTriad{
        d.cartesian(),
        Vec3{ct * cp, ct * sp, -st},
        Vec3{-sp, cp, 0.0},
    };
}

Spinor::Spinor(const CVec2& amplitudes) : v_(amplitudes) {
    if (!is_finite(v_)) throw std::invalid_argument("spinor amplitudes must be finite");
    const double n = norm(v_);
    if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("spinor is not normalized");
    v_ = (cplx{1.0 / n, 0.0}) * v_;
}

CMat2 pauli_x() { return cmat2(0.0, 1.0, 1.0, 0.0); }
CMat2 pauli_y() { return cmat2(0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0); }
CMat2 pauli_z() { return cmat2(1.0, 0.0, 0.0, -1.0); }

CMat2 sigma_dot(const Direction& a) {
    const Vec3& n = a.cartesian();
    return cmat2(n.z, cplx{n.x, -n.y}, cplx{n.x, n.y}, -n.z);
}

Spinor spinor_plus(double theta, double phi) {
    check_angles(theta, phi);
    const double h = 0.5 * theta;
    return Spinor(cvec2(std::cos(h), std::polar(std::sin(h), phi)));
}

Spinor spinor_minus(double theta, double phi) {
    check_angles(theta, phi);
    const double h = 0.5 * theta;
    return Spinor(cvec2(-std::polar(std::sin(h), -phi), std::cos(h)));
}

Spinor spinor_plus(const Direction& d) { return spinor_plus(d.theta(), d.phi()); }
Spinor spinor_minus(const Direction& d) { return spinor_minus(d.theta(), d.phi()); }

CMat2 rotation_matrix(double theta, double phi) {
    const Spinor p = spinor_plus(theta, phi);
    const Spinor m = spinor_minus(theta, phi);
    return cmat2(p[0], m[0], p[1], m[1]);
}

double expectation_projection(const Spinor& s, const Direction& a) {
    return std::real(inner(s.amplitudes(), matvec(sigma_dot(a), s.amplitudes())));
}

Vec3 bloch_vector(const Spinor& s) {
    const CVec2& v = s.amplitudes();
    const cplx t = std::conj(v[0]) * v[1];
    return Vec3{2.0 * t.real(), 2.0 * t.imag(), std::norm(v[0]) - std::norm(v[1])};
}

cplx off_diagonal(const Direction& r, const Direction& a) {
    return inner(spinor_minus(r).amplitudes(),
                 matvec(sigma_dot(a), spinor_plus(r).amplitudes()));
}

Vec3 reflect_bloch(const Direction& r, const Direction& a) {
    const Vec3& rv = r.cartesian();
    const Vec3& av = a.cartesian();
    return 2.0 * dot(rv, av) * av - rv;
}

Spinor apply_projection(const Direction& a, const Spinor& s) {
    return Spinor(matvec(sigma_dot(a), s.amplitudes()));
}

bool equal_up_to_phase(const Spinor& u, const Spinor& v, double tol) {
    return std::abs(std::abs(inner(u.amplitudes(), v.amplitudes())) - 1.0) <= tol;
}

}  // namespace spinhalf
