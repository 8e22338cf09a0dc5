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
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinhalf {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Real 3-vectors (measurement axes, Bloch vectors).
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Clamp to [-1,1] before acos; colinear inputs land at +/-1 up to roundoff.
inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::acos(clamp_unit(dot(a, b)));
}

// ---------------------------------------------------------------------------
// Fixed-size complex vectors and matrices (N = 2 for one spin, 4 for a pair).
// Matrices are row-major. Basis order is fixed once and for all:
//   CVec2: (|+z>, |-z>)
//   CVec4: lexicographic product order (|++>, |+->, |-+>, |-->)
// ---------------------------------------------------------------------------

template <std::size_t N>
struct CVec {
    std::array<cplx, N> c{};

    cplx& operator[](std::size_t i) { return c[i]; }
    const cplx& operator[](std::size_t i) const { return c[i]; }
};

template <std::size_t N>
struct CMat {
    std::array<cplx, N * N> m{};

    cplx& at(std::size_t i, std::size_t j) { return m[i * N + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return m[i * N + j]; }
};

using CVec2 = CVec<2>;
using CVec4 = CVec<4>;
using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

inline CVec2 cvec2(cplx a, cplx b) { return {{a, b}}; }
inline CVec4 cvec4(cplx a, cplx b, cplx c, cplx d) { return {{a, b, c, d}}; }
inline CMat2 cmat2(cplx m00, cplx m01, cplx m10, cplx m11) { return {{m00, m01, m10, m11}}; }

template <std::size_t N>
inline CMat<N> identity() {
    CMat<N> r;
    for (std::size_t i = 0; i < N; ++i) r.at(i, i) = 1.0;
    return r;
}

// Dirac pairing: conjugate-linear in the left (bra) argument.
template <std::size_t N>
inline cplx inner(const CVec<N>& bra, const CVec<N>& ket) {
    cplx s{};
    for (std::size_t i = 0; i < N; ++i) s += std::conj(bra[i]) * ket[i];
    return s;
}

template <std::size_t N>
inline double norm(const CVec<N>& v) {
    return std::sqrt(std::real(inner(v, v)));
}

template <std::size_t N>
inline CVec<N> operator+(const CVec<N>& a, const CVec<N>& b) {
    CVec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t N>
inline CVec<N> operator-(const CVec<N>& a, const CVec<N>& b) {
    CVec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t N>
inline CVec<N> operator*(cplx s, const CVec<N>& v) {
    CVec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = s * v[i];
    return r;
}

template <std::size_t N>
inline CMat<N> operator+(const CMat<N>& a, const CMat<N>& b) {
    CMat<N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

template <std::size_t N>
inline CMat<N> operator-(const CMat<N>& a, const CMat<N>& b) {
    CMat<N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

template <std::size_t N>
inline CMat<N> operator*(cplx s, const CMat<N>& m) {
    CMat<N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = s * m.m[i];
    return r;
}

template <std::size_t N>
inline CVec<N> matvec(const CMat<N>& m, const CVec<N>& v) {
    CVec<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        cplx s{};
        for (std::size_t j = 0; j < N; ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

template <std::size_t N>
inline CMat<N> matmul(const CMat<N>& a, const CMat<N>& b) {
    CMat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            cplx s{};
            for (std::size_t k = 0; k < N; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

template <std::size_t N>
inline CMat<N> adjoint(const CMat<N>& m) {
    CMat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r.at(i, j) = std::conj(m.at(j, i));
    return r;
}

// |ket><bra|
template <std::size_t N>
inline CMat<N> outer(const CVec<N>& ket, const CVec<N>& bra) {
    CMat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r.at(i, j) = ket[i] * std::conj(bra[j]);
    return r;
}

// Kronecker product in the fixed lexicographic order:
// (A (x) B)[(2i+k),(2j+l)] = A[i,j] * B[k,l].
inline CMat4 tensor_mat(const CMat2& lhs, const CMat2& rhs) {
    CMat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r.at(2 * i + k, 2 * j + l) = lhs.at(i, j) * rhs.at(k, l);
    return r;
}

// (u (x) v)[2i+j] = u[i] * v[j]; the norm multiplies.
inline CVec4 tensor_vec(const CVec2& lhs, const CVec2& rhs) {
    CVec4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r[2 * i + j] = lhs[i] * rhs[j];
    return r;
}

// ---------------------------------------------------------------------------
// Comparison helpers.
// ---------------------------------------------------------------------------

template <std::size_t N>
inline double max_abs_diff(const CVec<N>& a, const CVec<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

template <std::size_t N>
inline double max_abs_diff(const CMat<N>& a, const CMat<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
    return m;
}

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

template <std::size_t N>
inline bool is_hermitian(const CMat<N>& m, double tol) {
    return max_abs_diff(m, adjoint(m)) <= tol;
}

template <std::size_t N>
inline bool is_unitary(const CMat<N>& m, double tol) {
    return max_abs_diff(matmul(adjoint(m), m), identity<N>()) <= tol;
}

template <std::size_t N>
inline bool is_finite(const CVec<N>& v) {
    for (std::size_t i = 0; i < N; ++i)
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    return true;
}

}  // namespace spinhalf
