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

#include "spinhalf/linalg.hpp"

namespace spinhalf {

/// A unit direction in 3D, kept both as (theta, phi) angles and as the
/// cartesian unit vector (sin t cos p, sin t sin p, cos t).
///
/// theta is zenithal in [0, pi], phi azimuthal in [0, 2pi). Out-of-domain or
/// non-finite angles are rejected with std::invalid_argument.
class Direction {
public:
    Direction(double theta, double phi);

    /// Accepts vectors within 1e-9 of unit norm (normalized on entry);
    /// anything farther off is rejected.
    static Direction from_cartesian(const Vec3& v);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    const Vec3& cartesian() const { return n_; }

private:
    double theta_;
    double phi_;
    Vec3 n_;
};

/// Right-handed orthonormal triad of spherical coordinates at a direction:
/// r = theta_hat x phi_hat.
struct SphericalTriad {
    Vec3 r;
    Vec3 theta_hat;  // (cos t cos p, cos t sin p, -sin t)
    Vec3 phi_hat;    // (-sin p, cos p, 0)
};

SphericalTriad triad(const Direction& d);

/// Normalized two-component state. Inputs within 1e-9 of unit norm are
/// renormalized on construction; worse inputs are rejected.
class Spinor {
public:
    explicit Spinor(const CVec2& amplitudes);

    const CVec2& amplitudes() const { return v_; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }

private:
    CVec2 v_;
};

// Pauli matrices in the fixed (|+z>, |-z>) basis; entries are exact.
CMat2 pauli_x();
CMat2 pauli_y();
CMat2 pauli_z();

/// Spin projection along a: [[a_z, a_x - i a_y], [a_x + i a_y, -a_z]].
/// Hermitian, traceless, squares to the identity.
CMat2 sigma_dot(const Direction& a);

/// Eigenstates of sigma_dot(r) with eigenvalue +1 / -1:
///   plus  = (cos(t/2), e^{i p} sin(t/2))
///   minus = (-e^{-i p} sin(t/2), cos(t/2))
Spinor spinor_plus(double theta, double phi);
Spinor spinor_minus(double theta, double phi);
Spinor spinor_plus(const Direction& d);
Spinor spinor_minus(const Direction& d);

/// Unitary with columns (spinor_plus, spinor_minus); maps (1,0) to spinor_plus.
CMat2 rotation_matrix(double theta, double phi);

/// <s| sigma_dot(a) |s>. Real for any state; equals +/- r.a on the
/// sigma_dot(r) eigenstates.
double expectation_projection(const Spinor& s, const Direction& a);

/// (<sigma_x>, <sigma_y>, <sigma_z>); a unit vector for pure states.
Vec3 bloch_vector(const Spinor& s);

/// <-_r| sigma_dot(a) |+_r> = e^{i phi} (theta_hat + i phi_hat).a,
/// with modulus |r x a| = sin(angle between r and a).
cplx off_diagonal(const Direction& r, const Direction& a);

/// Bloch vector of sigma_dot(a)|+_r>: 2 (r.a) a - r. Applying the map twice
/// with the same a is the identity.
Vec3 reflect_bloch(const Direction& r, const Direction& a);

/// sigma_dot(a)|s>; norm-preserving and involutive.
Spinor apply_projection(const Direction& a, const Spinor& s);

/// States are physically equal up to a global phase: |<u|v>| = 1.
bool equal_up_to_phase(const Spinor& u, const Spinor& v, double tol);

}  // namespace spinhalf
