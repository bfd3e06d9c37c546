// Copyright 2026 The bincorr Authors
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

/**
 * @file linalg.hpp
 * Fixed-size dense kernels for the two-qubit problem: real 3-vectors and
 * 3x3 matrices (Bloch vectors, correlation tensors) and complex 2x2 / 4x4
 * matrices (single-qubit operators, joint density matrices).
 *
 * Spectral routines are cyclic Jacobi sweeps. At these dimensions they
 * converge to machine precision in a handful of sweeps.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

namespace bincorr {

using Complex = std::complex<double>;

struct Vec3 {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double x, double y, double z) : v{x, y, z} {}

  constexpr double &operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }

  static constexpr Vec3 unit(std::size_t i) {
    Vec3 e;
    e.v[i] = 1.0;
    return e;
  }

  bool is_finite() const;
  double norm() const;
  Vec3 normalized() const;

  friend Vec3 operator+(const Vec3 &a, const Vec3 &b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend Vec3 operator-(const Vec3 &a, const Vec3 &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  }
  friend Vec3 operator*(double s, const Vec3 &a) {
    return {s * a[0], s * a[1], s * a[2]};
  }
  friend bool operator==(const Vec3 &, const Vec3 &) = default;
};

double dot(const Vec3 &a, const Vec3 &b);
Vec3 cross(const Vec3 &a, const Vec3 &b);

struct Mat3 {
  std::array<double, 9> e{};  // row-major

  constexpr double &operator()(std::size_t r, std::size_t c) {
    return e[3 * r + c];
  }
  constexpr double operator()(std::size_t r, std::size_t c) const {
    return e[3 * r + c];
  }

  static Mat3 zero() { return {}; }
  static Mat3 identity();
  static Mat3 diagonal(double d0, double d1, double d2);
  static Mat3 outer(const Vec3 &a, const Vec3 &b);
  static Mat3 from_rows(const Vec3 &r0, const Vec3 &r1, const Vec3 &r2);

  bool is_finite() const;
  Mat3 transpose() const;
  Vec3 row(std::size_t r) const { return {e[3 * r], e[3 * r + 1], e[3 * r + 2]}; }
  Vec3 col(std::size_t c) const { return {e[c], e[3 + c], e[6 + c]}; }

  friend Mat3 operator+(const Mat3 &a, const Mat3 &b);
  friend Mat3 operator-(const Mat3 &a, const Mat3 &b);
  friend Mat3 operator*(double s, const Mat3 &a);
  friend Mat3 operator*(const Mat3 &a, const Mat3 &b);
  friend Vec3 operator*(const Mat3 &a, const Vec3 &x);
  friend bool operator==(const Mat3 &, const Mat3 &) = default;
};

/// Largest absolute entrywise difference.
double max_abs_diff(const Mat3 &a, const Mat3 &b);
double max_abs_diff(const Vec3 &a, const Vec3 &b);

/// Dense N x N complex matrix, row-major.
template <std::size_t N>
struct CMatrix {
  static constexpr std::size_t dim = N;
  std::array<Complex, N * N> e{};

  constexpr Complex &operator()(std::size_t r, std::size_t c) {
    return e[N * r + c];
  }
  constexpr const Complex &operator()(std::size_t r, std::size_t c) const {
    return e[N * r + c];
  }

  static CMatrix identity() {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  bool is_finite() const {
    for (const auto &z : e)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  CMatrix adjoint() const {
    CMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// max_ij |m_ij - conj(m_ji)|
  double hermitian_defect() const {
    double d = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
  }

  friend CMatrix operator+(const CMatrix &a, const CMatrix &b) {
    CMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
  }
  friend CMatrix operator-(const CMatrix &a, const CMatrix &b) {
    CMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.e[i] = a.e[i] - b.e[i];
    return out;
  }
  friend CMatrix operator*(Complex s, const CMatrix &a) {
    CMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.e[i] = s * a.e[i];
    return out;
  }
  friend CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    CMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }
  friend bool operator==(const CMatrix &, const CMatrix &) = default;
};

using CMat2 = CMatrix<2>;
using CMat4 = CMatrix<4>;

template <std::size_t N>
double max_abs_diff(const CMatrix<N> &a, const CMatrix<N> &b) {
  double d = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, std::abs(a.e[i] - b.e[i]));
  return d;
}

/// Kronecker product with `left` as the slow (outer) index.
CMat4 kron(const CMat2 &left, const CMat2 &right);

/// Tr(a * b) without forming the product.
template <std::size_t N>
Complex trace_of_product(const CMatrix<N> &a, const CMatrix<N> &b) {
  Complex t = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t k = 0; k < N; ++k) t += a(r, k) * b(k, r);
  return t;
}

inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-8;

struct HermitianEigen {
  std::array<double, 4> values;  // ascending
  CMat4 vectors;                 // column i pairs with values[i]
};

/// Eigenvalues of a Hermitian 4x4 matrix, ascending.
/// Throws NotHermitian when max |m - m^H| exceeds 1e-9.
std::array<double, 4> hermitian_eigenvalues(const CMat4 &m);
HermitianEigen hermitian_eigensystem(const CMat4 &m);

/// Singular values of a real 3x3 matrix, descending.
std::array<double, 3> singular_values(const Mat3 &m);

/// Number of singular values strictly above `abs_tol` (must be > 0).
int numeric_rank(const Mat3 &m, double abs_tol = kDefaultRankTol);

int numeric_rank_from_singular_values(const std::array<double, 3> &sv, double abs_tol);

double det3(const Mat3 &m);

/**
 * Two unit vectors spanning the plane orthogonal to `v`.
 *
 * The first is v x e_k normalised, where e_k is the standard basis vector
 * along the smallest |v_k| (lowest index on ties); the second is
 * v_hat x first. Throws ZeroVector for v = 0.
 */
std::pair<Vec3, Vec3> orthogonal_complement_basis(const Vec3 &v);

}  // namespace bincorr
