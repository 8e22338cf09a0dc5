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

#include "spinhalf/quadrature.hpp"
#include "spinhalf/spin.hpp"

namespace spinhalf {

/// Normalized two-particle state in the fixed lexicographic product basis.
class BipartiteState {
public:
    explicit BipartiteState(const CVec4& amplitudes);

    const CVec4& amplitudes() const { return v_; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }

private:
    CVec4 v_;
};

/// Product eigenbasis of the projection pair along (a, b), in the fixed order
/// k = 1..4: (+,-), (-,+), (+,+), (-,-).
struct ProductBasisEntry {
    BipartiteState state;
    int alpha;  // outcome on particle 1, +1 or -1
    int beta;   // outcome on particle 2, +1 or -1
};

struct ProductBasis {
    std::array<ProductBasisEntry, 4> entries;
};

/// The four basis terms of the correlation in the basis aligned with a
/// reference direction r, plus their (real) sum.
struct CorrelationBreakdown {
    cplx f1, f2, f3, f4;
    double total;
};

/// Outcome weights of the projection pair along (a, b): weights[k-1] is the
/// joint probability of the k-th outcome pair, eigenvalues[k-1] the product
/// eigenvalue alpha_k * beta_k = (-1, -1, +1, +1).
struct JointDistribution {
    Direction setting_a;
    Direction setting_b;
    std::array<double, 4> weights;
    std::array<int, 4> eigenvalues;
};

/// The spin-zero state (|+_r>|-_r> - |-_r>|+_r>)/sqrt(2). Spherically
/// symmetric: any two choices of r give the same state up to a global phase.
BipartiteState singlet_state(const Direction& r);
BipartiteState singlet_state();  // r = +z

/// <state| sigma_dot(a) (x) sigma_dot(b) |state> computed as a full matrix
/// sandwich (no closed form shortcuts).
double pair_expectation(const BipartiteState& state, const Direction& a, const Direction& b);

/// <state| sigma_dot(a) (x) I |state> (side 1) or <state| I (x) sigma_dot(a)
/// |state> (side 2). Vanishes on the singlet for every a.
double single_side_expectation(const BipartiteState& state, const Direction& a, int side);

/// Singlet correlation of the projections along a and b; equals -a.b.
double correlation(const Direction& a, const Direction& b);

/// Correlation split over the four r-aligned product states:
///   f1 = f2 = -(r.a)(r.b)/2
///   f3 = conj(f4) = -[(r x a).(r x b) - i r.(a x b)]/2
/// computed from the bracket definitions, not from those closed forms.
CorrelationBreakdown fk_decomposition(const Direction& r, const Direction& a,
                                      const Direction& b);

ProductBasis product_basis(const Direction& a, const Direction& b);

/// weights[k-1] = |<basis_k|singlet>|^2, the source of truth for all derived
/// probabilities; the closed form (1 - A_k a.b)/4 is a cross-check only.
JointDistribution joint_distribution(const Direction& a, const Direction& b);

/// Joint weight for a specific outcome pair (alpha, beta), each +1 or -1.
double joint_weight(const JointDistribution& jd, int alpha, int beta);

/// P(outcome on the given side) = 1/2 for every setting pair.
double marginal(const Direction& a, const Direction& b, int side, int outcome);

/// P(alpha | beta) = P(alpha, beta) / P(beta on side 2).
double conditional(const Direction& a, const Direction& b, int alpha, int given_beta);

enum class AverageMethod { quadrature, montecarlo };

struct AverageOptions {
    int theta_nodes = 64;
    int phi_nodes = 128;
    long long samples = 1'000'000;
    std::uint64_t seed = 0;
};

/// Average of the joint weight for (alpha, beta) over all orientations of b,
/// under the normalized measure dOmega/4pi (the unnormalized integral would
/// carry an extra 4pi). Equals 1/4 for every a and outcome pair.
MonteCarloEstimate average_joint_over_b(const Direction& a, int alpha, int beta,
                                        AverageMethod method, const AverageOptions& opt = {});

}  // namespace spinhalf
