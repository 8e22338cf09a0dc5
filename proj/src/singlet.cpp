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

#include "spinhalf/singlet.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace spinhalf {

namespace {

constexpr std::array<int, 4> kPairEigenvalues = {-1, -1, +1, +1};

void check_outcome(int value, const char* name) {
    if (value != 1 && value != -1)
        throw std::invalid_argument(std::string(name) + " must be +1 or -1");
}

// k = 1..4 in the fixed outcome order (+,-), (-,+), (+,+), (-,-).
int outcome_index(int alpha, int beta) {
    if (alpha == +1 && beta == -1) return 1;
    if (alpha == -1 && beta == +1) return 2;
    if (alpha == +1 && beta == +1) return 3;
    return 4;
}

}  // namespace

BipartiteState::BipartiteState(const CVec4& amplitudes) : v_(amplitudes) {
    if (!is_finite(v_))
        throw std::invalid_argument("bipartite amplitudes must be finite");
    const double n = norm(v_);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("bipartite state is not normalized");
    v_ = (cplx{1.0 / n, 0.0}) * v_;
}

BipartiteState singlet_state(const Direction& r) {
    const CVec2 plus = spinor_plus(r).amplitudes();
    const CVec2 minus = spinor_minus(r).amplitudes();
    const cplx inv_sqrt2{1.0 / std::sqrt(2.0), 0.0};
    return BipartiteState(inv_sqrt2 * (tensor_vec(plus, minus) - tensor_vec(minus, plus)));
}

BipartiteState singlet_state() { return singlet_state(Direction(0.0, 0.0)); }

double pair_expectation(const BipartiteState& state, const Direction& a, const Direction& b) {
    const CMat4 op = tensor_mat(sigma_dot(a), sigma_dot(b));
    return std::real(inner(state.amplitudes(), matvec(op, state.amplitudes())));
}

double single_side_expectation(const BipartiteState& state, const Direction& a, int side) {
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
    const CMat4 op = side == 1 ? tensor_mat(sigma_dot(a), identity<2>())
                               : tensor_mat(identity<2>(), sigma_dot(a));
    return std::real(inner(state.amplitudes(), matvec(op, state.amplitudes())));
}

double correlation(const Direction& a, const Direction& b) {
    return pair_expectation(singlet_state(), a, b);
}

CorrelationBreakdown fk_decomposition(const Direction& r, const Direction& a,
                                      const Direction& b) {
    const BipartiteState psi0 = singlet_state(r);
    const CVec2 plus = spinor_plus(r).amplitudes();
    const CVec2 minus = spinor_minus(r).amplitudes();
    const std::array<CVec4, 4> basis = {
        tensor_vec(plus, minus),
        tensor_vec(minus, plus),
        tensor_vec(plus, plus),
        tensor_vec(minus, minus),
    };
    const CMat4 a_side = tensor_mat(sigma_dot(a), identity<2>());
    const CMat4 b_side = tensor_mat(identity<2>(), sigma_dot(b));

    // term_k = <psi0| A (x) I |k> <k| I (x) B |psi0>
    std::array<cplx, 4> term;
    cplx sum{};
    for (std::size_t k = 0; k < 4; ++k) {
        term[k] = inner(psi0.amplitudes(), matvec(a_side, basis[k])) *
                  inner(basis[k], matvec(b_side, psi0.amplitudes()));
        sum += term[k];
    }
    return CorrelationBreakdown{term[0], term[1], term[2], term[3], sum.real()};
}

ProductBasis product_basis(const Direction& a, const Direction& b) {
    const CVec2 ap = spinor_plus(a).amplitudes();
    const CVec2 am = spinor_minus(a).amplitudes();
    const CVec2 bp = spinor_plus(b).amplitudes();
    const CVec2 bm = spinor_minus(b).amplitudes();
    return ProductBasis{{{
        {BipartiteState(tensor_vec(ap, bm)), +1, -1},
        {BipartiteState(tensor_vec(am, bp)), -1, +1},
        {BipartiteState(tensor_vec(ap, bp)), +1, +1},
        {BipartiteState(tensor_vec(am, bm)), -1, -1},
    }}};
}

JointDistribution joint_distribution(const Direction& a, const Direction& b) {
    const BipartiteState psi0 = singlet_state();
    const ProductBasis basis = product_basis(a, b);
    std::array<double, 4> w;
    double sum = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        const double p = std::norm(inner(basis.entries[k].state.amplitudes(), psi0.amplitudes()));
        w[k] = p < 0.0 ? 0.0 : p;  // guard against -1e-15-scale noise
        sum += w[k];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        std::cerr << "joint_distribution: weights renormalized, drift=" << (sum - 1.0) << "\n";
        for (double& p : w) p /= sum;
    }
    return JointDistribution{a, b, w, kPairEigenvalues};
}

double joint_weight(const JointDistribution& jd, int alpha, int beta) {
    check_outcome(alpha, "alpha");
    check_outcome(beta, "beta");
    return jd.weights[outcome_index(alpha, beta) - 1];
}

double marginal(const Direction& a, const Direction& b, int side, int outcome) {
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
    check_outcome(outcome, "outcome");
    const JointDistribution jd = joint_distribution(a, b);
    if (side == 1)
        return joint_weight(jd, outcome, -1) + joint_weight(jd, outcome, +1);
    return joint_weight(jd, -1, outcome) + joint_weight(jd, +1, outcome);
}

double conditional(const Direction& a, const Direction& b, int alpha, int given_beta) {
    check_outcome(alpha, "alpha");
    check_outcome(given_beta, "given_beta");
    const double pb = marginal(a, b, 2, given_beta);
    if (pb <= 0.0)
        throw std::runtime_error("conditional: conditioning outcome has zero probability");
    return joint_weight(joint_distribution(a, b), alpha, given_beta) / pb;
}

MonteCarloEstimate average_joint_over_b(const Direction& a, int alpha, int beta,
                                        AverageMethod method, const AverageOptions& opt) {
    check_outcome(alpha, "alpha");
    check_outcome(beta, "beta");
    const auto f = [&](const Direction& b) {
        return joint_weight(joint_distribution(a, b), alpha, beta);
    };
    if (method == AverageMethod::quadrature) {
        MonteCarloEstimate est;
        est.value = sphere_average(f, opt.theta_nodes, opt.phi_nodes);
        est.n = static_cast<long long>(opt.theta_nodes) * opt.phi_nodes;
        return est;
    }
    return sphere_average_mc(f, opt.samples, opt.seed);
}

}  // namespace spinhalf
