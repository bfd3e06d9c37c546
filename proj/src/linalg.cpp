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

#include "bincorr/linalg.hpp"

#include <numeric>

#include "bincorr/error.hpp"

namespace bincorr {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOffDiagonalTol = 1e-14;

void require_finite(bool ok, const char *what) {
  if (!ok) throw Error(ErrorCode::NonFinite, what);
}

}  // namespace

bool Vec3::is_finite() const {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

double Vec3::norm() const { return std::hypot(v[0], v[1], v[2]); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "cannot normalise the zero vector");
  return (1.0 / n) * *this;
}

double dot(const Vec3 &a, const Vec3 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Mat3 Mat3::identity() { return diagonal(1.0, 1.0, 1.0); }

Mat3 Mat3::diagonal(double d0, double d1, double d2) {
  Mat3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

Mat3 Mat3::outer(const Vec3 &a, const Vec3 &b) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = a[r] * b[c];
  return m;
}

Mat3 Mat3::from_rows(const Vec3 &r0, const Vec3 &r1, const Vec3 &r2) {
  Mat3 m;
  for (std::size_t c = 0; c < 3; ++c) {
    m(0, c) = r0[c];
    m(1, c) = r1[c];
    m(2, c) = r2[c];
  }
  return m;
}

bool Mat3::is_finite() const {
  return std::all_of(e.begin(), e.end(), [](double x) { return std::isfinite(x); });
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat3 operator+(const Mat3 &a, const Mat3 &b) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.e[i] = a.e[i] + b.e[i];
  return out;
}

Mat3 operator-(const Mat3 &a, const Mat3 &b) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.e[i] = a.e[i] - b.e[i];
  return out;
}

Mat3 operator*(double s, const Mat3 &a) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.e[i] = s * a.e[i];
  return out;
}

Mat3 operator*(const Mat3 &a, const Mat3 &b) {
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return out;
}

Vec3 operator*(const Mat3 &a, const Vec3 &x) {
  return {dot(a.row(0), x), dot(a.row(1), x), dot(a.row(2), x)};
}

double max_abs_diff(const Mat3 &a, const Mat3 &b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 9; ++i) d = std::max(d, std::abs(a.e[i] - b.e[i]));
  return d;
}

double max_abs_diff(const Vec3 &a, const Vec3 &b) {
  return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

CMat4 kron(const CMat2 &left, const CMat2 &right) {
  CMat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = left(i, j) * right(k, l);
  return out;
}

HermitianEigen hermitian_eigensystem(const CMat4 &m) {
  require_finite(m.is_finite(), "matrix has non-finite entries");
  const double defect = m.hermitian_defect();
  if (defect > kHermitianTol)
    throw Error(ErrorCode::NotHermitian,
                "max |m - m^H| = " + std::to_string(defect) + " exceeds 1e-9");

  CMat4 a = m;
  CMat4 v = CMat4::identity();
  double scale = 0.0;
  for (const auto &z : m.e) scale += std::norm(z);
  scale = std::max(1.0, std::sqrt(scale));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q)
        if (p != q) off += std::norm(a(p, q));
    if (std::sqrt(off) < kOffDiagonalTol * scale) break;

    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq == 0.0) continue;
        // Phase q so that the (p, q) entry becomes real, then apply the
        // real symmetric Jacobi rotation that annihilates it.
        const Complex phase = std::conj(a(p, q)) / apq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        CMat4 j = CMat4::identity();
        j(p, p) = c;
        j(p, q) = s;
        j(q, p) = -s * phase;
        j(q, q) = c * phase;

        a = j.adjoint() * a * j;
        v = v * j;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t k) {
    return a(i, i).real() < a(k, k).real();
  });

  HermitianEigen out{};
  for (std::size_t i = 0; i < 4; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (std::size_t r = 0; r < 4; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const CMat4 &m) {
  return hermitian_eigensystem(m).values;
}

// One-sided (Hestenes) Jacobi: rotate column pairs until mutually
// orthogonal; the column norms are then the singular values. Equivalent to
// Jacobi on m^T m but never forms the product, so small singular values keep
// full absolute accuracy.
std::array<double, 3> singular_values(const Mat3 &m) {
  require_finite(m.is_finite(), "matrix has non-finite entries");
  std::array<Vec3, 3> cols{m.col(0), m.col(1), m.col(2)};

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = i + 1; k < 3; ++k) {
        const double alpha = dot(cols[i], cols[i]);
        const double beta = dot(cols[k], cols[k]);
        const double gamma = dot(cols[i], cols[k]);
        if (gamma == 0.0 || std::abs(gamma) <= kOffDiagonalTol * std::sqrt(alpha * beta))
          continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Vec3 ci = cols[i];
        const Vec3 ck = cols[k];
        cols[i] = c * ci - s * ck;
        cols[k] = s * ci + c * ck;
      }
    }
    if (!rotated) break;
  }

  std::array<double, 3> sv{cols[0].norm(), cols[1].norm(), cols[2].norm()};
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

int numeric_rank_from_singular_values(const std::array<double, 3> &sv, double abs_tol) {
  if (!(abs_tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "rank tolerance must be positive");
  return static_cast<int>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > abs_tol; }));
}

int numeric_rank(const Mat3 &m, double abs_tol) {
  return numeric_rank_from_singular_values(singular_values(m), abs_tol);
}

double det3(const Mat3 &m) {
  require_finite(m.is_finite(), "matrix has non-finite entries");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::pair<Vec3, Vec3> orthogonal_complement_basis(const Vec3 &v) {
  require_finite(v.is_finite(), "vector has non-finite components");
  const double n = v.norm();
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "no complement basis for the zero vector");

  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(v[i]) < std::abs(v[k])) k = i;

  const Vec3 vhat = (1.0 / n) * v;
  const Vec3 first = cross(vhat, Vec3::unit(k)).normalized();
  const Vec3 second = cross(vhat, first).normalized();
  return {first, second};
}

}  // namespace bincorr
