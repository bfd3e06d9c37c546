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
 * @file qstate.hpp
 * States of a two-qubit system and their Pauli (Bloch) expansion
 *
 *   rho = 1/4 (1x1 + a.sigma x 1 + 1 x b.sigma + sum_ij F_ij sigma_i x sigma_j).
 *
 * Basis order is |a1 b1>, |a1 b2>, |a2 b1>, |a2 b2>: subsystem A is the left
 * Kronecker factor. Values are validated once, at construction.
 */

#include <array>
#include <optional>
#include <string>

#include "bincorr/linalg.hpp"

namespace bincorr {

inline constexpr double kStateTol = 1e-9;
inline constexpr double kImagResidueTol = 1e-10;

namespace pauli {
CMat2 identity();
CMat2 x();
CMat2 y();
CMat2 z();
/// sigma_1, sigma_2, sigma_3 in that order.
const std::array<CMat2, 3> &all();
/// v . sigma
CMat2 dot(const Vec3 &v);
}  // namespace pauli

class PureState {
 public:
  /// Throws NotNormalized unless sum |amp|^2 = 1 within 1e-9.
  explicit PureState(const std::array<Complex, 4> &amplitudes);

  /// Rescales to unit norm. Throws ZeroVector for the zero vector.
  static PureState normalize(std::array<Complex, 4> amplitudes);

  const std::array<Complex, 4> &amplitudes() const { return amps_; }
  const Complex &operator[](std::size_t i) const { return amps_[i]; }

 private:
  std::array<Complex, 4> amps_;
};

class DensityMatrix {
 public:
  /// Throws InvalidState naming the first violated invariant
  /// (finite, Hermitian, unit trace, positive semidefinite).
  explicit DensityMatrix(const CMat4 &rho);

  const CMat4 &matrix() const { return rho_; }
  const Complex &operator()(std::size_t r, std::size_t c) const { return rho_(r, c); }

  /// Tr(rho^2)
  double purity() const;
  /// Purity equal to 1 within 1e-9.
  bool is_pure() const;

 private:
  CMat4 rho_;
};

/// Describes why `m` is not a density matrix, or nullopt when it is one.
std::optional<std::string> density_matrix_violation(const CMat4 &m);

struct BlochForm {
  Vec3 a;
  Vec3 b;
  Mat3 f;
};

using QubitOperator = CMat2;

DensityMatrix density_from_pure(const PureState &psi);

/// a_i = Tr(rho sigma_i x 1), b_j = Tr(rho 1 x sigma_j), f_ij = Tr(rho sigma_i x sigma_j).
/// Imaginary parts above 1e-10 raise InvalidState.
BlochForm bloch_decompose(const DensityMatrix &rho);

/// Inverse of bloch_decompose. Throws NotPositive when the assembled matrix
/// has an eigenvalue below -1e-9, InvalidState for other violations.
DensityMatrix bloch_assemble(const BlochForm &bf);

/// Traces out subsystem A, leaving rho_B.
CMat2 partial_trace_A(const DensityMatrix &rho);
/// Traces out subsystem B, leaving rho_A.
CMat2 partial_trace_B(const DensityMatrix &rho);

/// 1/2 (1 + x.sigma). Throws BlochOutOfBall when |x| > 1 + 1e-12.
QubitOperator observable_from_bloch(const Vec3 &x);

/// q x r, A on the left.
CMat4 joint_operator(const QubitOperator &q, const QubitOperator &r);

/// rho_A x rho_B
DensityMatrix product_density(const CMat2 &rho_a, const CMat2 &rho_b);

}  // namespace bincorr
