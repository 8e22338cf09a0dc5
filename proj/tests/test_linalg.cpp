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

#include "random_inputs.hpp"
#include "spinhalf/linalg.hpp"
#include "spinhalf/spin.hpp"

using namespace spinhalf;

namespace {
const cplx kOne{1.0, 0.0};
const cplx kZero{0.0, 0.0};
}  // namespace

TEST_CASE("tensor product of matrices") {
    SUBCASE("identity times identity") {
        CHECK(max_abs_diff(tensor_mat(identity<2>(), identity<2>()), identity<4>()) == 0.0);
    }
    SUBCASE("sigma_z tensor sigma_z is diag(1,-1,-1,1)") {
        // hand expansion of the 2x2 blocks: [[B, 0], [0, -B]] with B = diag(1,-1)
        const CMat4 zz = tensor_mat(pauli_z(), pauli_z());
        CMat4 expected;
        expected.at(0, 0) = 1.0;
        expected.at(1, 1) = -1.0;
        expected.at(2, 2) = -1.0;
        expected.at(3, 3) = 1.0;
        CHECK(max_abs_diff(zz, expected) == 0.0);
    }
    SUBCASE("sigma_x tensor identity swaps the first-slot basis") {
        // hand matrix-vector product: (sigma_x (x) I)(1,0,0,0) = (0,0,1,0)
        const CVec4 got = matvec(tensor_mat(pauli_x(), identity<2>()),
                                 cvec4(kOne, kZero, kZero, kZero));
        CHECK(max_abs_diff(got, cvec4(kZero, kZero, kOne, kZero)) == 0.0);
    }
    SUBCASE("distributes over matvec on random inputs") {
        testing::Stream s(11);
        for (int t = 0; t < 200; ++t) {
            const CMat2 a = s.cmat<2>();
            const CMat2 b = s.cmat<2>();
            const CVec2 u = s.cvec<2>();
            const CVec2 v = s.cvec<2>();
            const CVec4 lhs = matvec(tensor_mat(a, b), tensor_vec(u, v));
            const CVec4 rhs = tensor_vec(matvec(a, u), matvec(b, v));
            CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
        }
    }
}

TEST_CASE("tensor product of vectors") {
    const CVec2 e0 = cvec2(kOne, kZero);
    const CVec2 e1 = cvec2(kZero, kOne);
    CHECK(max_abs_diff(tensor_vec(e0, e0), cvec4(kOne, kZero, kZero, kZero)) == 0.0);
    CHECK(max_abs_diff(tensor_vec(e0, e1), cvec4(kZero, kOne, kZero, kZero)) == 0.0);

    testing::Stream s(12);
    for (int t = 0; t < 100; ++t) {
        const CVec2 u = s.cvec<2>();
        const CVec2 v = s.cvec<2>();
        CHECK(norm(tensor_vec(u, v)) == doctest::Approx(norm(u) * norm(v)).epsilon(1e-12));
    }
}

TEST_CASE("inner product is the Dirac pairing") {
    const CVec2 e0 = cvec2(kOne, kZero);
    const CVec2 e1 = cvec2(kZero, kOne);
    CHECK(inner(e0, e0) == kOne);
    CHECK(inner(e0, e1) == kZero);

    testing::Stream s(13);
    for (int t = 0; t < 100; ++t) {
        const CVec4 u = s.cvec<4>();
        const CVec4 v = s.cvec<4>();
        // <u|v> = conj(<v|u>)
        CHECK(std::abs(inner(u, v) - std::conj(inner(v, u))) <= 1e-12);
        // conjugate-linear in the bra slot
        const cplx scale = s.amplitude();
        CHECK(std::abs(inner(scale * u, v) - std::conj(scale) * inner(u, v)) <= 1e-12);
    }
}

TEST_CASE("adjoint and products") {
    testing::Stream s(14);
    for (int t = 0; t < 100; ++t) {
        const CMat4 m = s.cmat<4>();
        const CMat4 n = s.cmat<4>();
        CHECK(max_abs_diff(adjoint(adjoint(m)), m) == 0.0);
        CHECK(max_abs_diff(adjoint(matmul(m, n)), matmul(adjoint(n), adjoint(m))) <= 1e-12);
        // <u|Mv> = <adjoint(M)u|v>
        const CVec4 u = s.cvec<4>();
        const CVec4 v = s.cvec<4>();
        CHECK(std::abs(inner(u, matvec(m, v)) - inner(matvec(adjoint(m), u), v)) <= 1e-12);
    }
}

TEST_CASE("hermiticity and unitarity predicates") {
    CHECK(is_hermitian(pauli_x(), 0.0));
    CHECK(is_hermitian(pauli_y(), 0.0));
    CHECK(is_unitary(pauli_z(), 0.0));
    testing::Stream s(15);
    const CMat2 m = s.cmat<2>();
    CHECK_FALSE(is_hermitian(m, 1e-12));  // random complex entries
}

TEST_CASE("operations are pure functions") {
    testing::Stream s(16);
    const CMat2 a = s.cmat<2>();
    const CMat2 b = s.cmat<2>();
    const CMat4 once = tensor_mat(a, b);
    const CMat4 twice = tensor_mat(a, b);
    for (std::size_t i = 0; i < 16; ++i) CHECK(once.m[i] == twice.m[i]);
}
