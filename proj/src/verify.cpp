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

#include "spinhalf/verify.hpp"

#include <cmath>
#include <numbers>

#include "spinhalf/rng.hpp"

namespace spinhalf {

namespace {

class DirectionStream {
public:
    explicit DirectionStream(std::uint64_t seed) : seed_(seed) {}

    Direction next() {
        const double z = 2.0 * rng::uniform_at(seed_, counter_++) - 1.0;
        double phi = 2.0 * std::numbers::pi * rng::uniform_at(seed_, counter_++);
        if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
        return Direction(std::acos(clamp_unit(z)), phi);
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

CheckResult make_result(std::string name, int trials, double value, double bound,
                        CheckResult::Kind kind = CheckResult::Kind::max_error) {
    CheckResult r;
    r.name = std::move(name);
    r.trials = trials;
    r.value = value;
    r.bound = bound;
    r.kind = kind;
    r.pass = kind == CheckResult::Kind::max_error ? value <= bound : value >= bound;
    return r;
}

double check_eigen_equation(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction r = dirs.next();
        const CMat2 op = sigma_dot(r);
        const CVec2 plus = spinor_plus(r).amplitudes();
        const CVec2 minus = spinor_minus(r).amplitudes();
        worst = std::max(worst, max_abs_diff(matvec(op, plus), plus));
        worst = std::max(worst, max_abs_diff(matvec(op, minus), cplx{-1.0, 0.0} * minus));
    }
    return worst;
}

double check_completeness(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction r = dirs.next();
        const CVec2 plus = spinor_plus(r).amplitudes();
        const CVec2 minus = spinor_minus(r).amplitudes();
        worst = std::max(worst,
                         max_abs_diff(outer(plus, plus) + outer(minus, minus), identity<2>()));
    }
    return worst;
}

double check_reflection(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction r = dirs.next();
        const Direction a = dirs.next();
        const Spinor flipped = apply_projection(a, spinor_plus(r));
        worst = std::max(worst, max_abs_diff(bloch_vector(flipped), reflect_bloch(r, a)));
        // a second application restores both the state and the Bloch vector
        const Spinor restored = apply_projection(a, flipped);
        worst = std::max(worst,
                         max_abs_diff(restored.amplitudes(), spinor_plus(r).amplitudes()));
        const Vec3 ra = reflect_bloch(r, a);
        const Vec3 av = a.cartesian();
        worst = std::max(worst, max_abs_diff(2.0 * dot(ra, av) * av - ra, r.cartesian()));
    }
    return worst;
}

double check_modulus_law(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction r = dirs.next();
        const Direction a = dirs.next();
        const double theta_ra = angle_between(r.cartesian(), a.cartesian());
        worst = std::max(worst, std::abs(std::abs(off_diagonal(r, a)) - std::sin(theta_ra)));
    }
    return worst;
}

double check_route_equivalence(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction r = dirs.next();
        const Direction a = dirs.next();
        const Direction b = dirs.next();
        const double expected = -dot(a.cartesian(), b.cartesian());
        const double sandwich = correlation(a, b);
        const double via_fk = fk_decomposition(r, a, b).total;
        const JointDistribution jd = joint_distribution(a, b);
        double via_weights = 0.0;
        for (int k = 0; k < 4; ++k) via_weights += jd.eigenvalues[k] * jd.weights[k];
        worst = std::max({worst, std::abs(sandwich - expected), std::abs(via_fk - expected),
                          std::abs(via_weights - expected)});
    }
    return worst;
}

double check_basis_insertion(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction r = dirs.next();
        const Direction a = dirs.next();
        const Direction b = dirs.next();
        const BipartiteState psi0 = singlet_state();
        const double direct = pair_expectation(psi0, a, b);
        const CMat4 a_side = tensor_mat(sigma_dot(a), identity<2>());
        const CMat4 b_side = tensor_mat(identity<2>(), sigma_dot(b));

        // r-aligned product basis
        const CVec2 rp = spinor_plus(r).amplitudes();
        const CVec2 rm = spinor_minus(r).amplitudes();
        CMat4 resolution_r =
            outer(tensor_vec(rp, rm), tensor_vec(rp, rm)) +
            outer(tensor_vec(rm, rp), tensor_vec(rm, rp)) +
            outer(tensor_vec(rp, rp), tensor_vec(rp, rp)) +
            outer(tensor_vec(rm, rm), tensor_vec(rm, rm));
        // setting-aligned eigenbasis
        const ProductBasis pb = product_basis(a, b);
        CMat4 resolution_ab = outer(pb.entries[0].state.amplitudes(),
                                    pb.entries[0].state.amplitudes());
        for (int k = 1; k < 4; ++k)
            resolution_ab = resolution_ab + outer(pb.entries[k].state.amplitudes(),
                                                  pb.entries[k].state.amplitudes());

        for (const CMat4& resolution : {resolution_r, resolution_ab}) {
            const CMat4 op = matmul(matmul(a_side, resolution), b_side);
            const double inserted =
                std::real(inner(psi0.amplitudes(), matvec(op, psi0.amplitudes())));
            worst = std::max(worst, std::abs(inserted - direct));
        }
    }
    return worst;
}

double check_weight_closed_form(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction a = dirs.next();
        const Direction b = dirs.next();
        const JointDistribution jd = joint_distribution(a, b);
        const double ab = dot(a.cartesian(), b.cartesian());
        for (int k = 0; k < 4; ++k)
            worst = std::max(worst,
                             std::abs(jd.weights[k] - (1.0 - jd.eigenvalues[k] * ab) / 4.0));
    }
    return worst;
}

double check_reference_independence(DirectionStream& dirs, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction r1 = dirs.next();
        const Direction r2 = dirs.next();
        const Direction a = dirs.next();
        const Direction b = dirs.next();
        const double c1 = pair_expectation(singlet_state(r1), a, b);
        const double c2 = pair_expectation(singlet_state(r2), a, b);
        worst = std::max(worst, std::abs(c1 - c2));
        // the state itself is reference-independent up to a global phase
        worst = std::max(worst, std::abs(std::abs(inner(singlet_state(r1).amplitudes(),
                                                        singlet_state(r2).amplitudes())) -
                                         1.0));
    }
    return worst;
}

double check_setting_dependence() {
    const Direction a(0.0, 0.0);
    const Direction b(0.0, 0.0);
    const Direction b_prime(std::numbers::pi / 2.0, 0.0);
    const JointDistribution jd1 = joint_distribution(a, b);
    const JointDistribution jd2 = joint_distribution(a, b_prime);
    double separation = 0.0;
    for (int k = 0; k < 4; ++k)
        separation = std::max(separation, std::abs(jd1.weights[k] - jd2.weights[k]));
    return separation;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    DirectionStream dirs(opt.seed);
    const int n = opt.trials;
    const auto tol = [&](double stated) {
        return opt.tolerance_override > 0.0 ? opt.tolerance_override : stated;
    };

    std::vector<CheckResult> results;
    results.push_back(
        make_result("projection eigen-equation", n, check_eigen_equation(dirs, n), tol(1e-12)));
    results.push_back(
        make_result("projector completeness", n, check_completeness(dirs, n), tol(1e-12)));
    results.push_back(
        make_result("Bloch reflection law", n, check_reflection(dirs, n), tol(1e-12)));
    results.push_back(
        make_result("off-diagonal modulus law", n, check_modulus_law(dirs, n), tol(1e-9)));
    results.push_back(make_result("correlation route equivalence", n,
                                  check_route_equivalence(dirs, n), tol(1e-12)));
    results.push_back(make_result("basis-insertion resolution", n,
                                  check_basis_insertion(dirs, n), tol(1e-12)));
    results.push_back(make_result("joint weight closed form", n,
                                  check_weight_closed_form(dirs, n), tol(1e-12)));
    results.push_back(make_result("reference-direction independence", n,
                                  check_reference_independence(dirs, n), tol(1e-12)));
    results.push_back(make_result("partition setting dependence", 1, check_setting_dependence(),
                                  0.1, CheckResult::Kind::min_separation));
    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace spinhalf
