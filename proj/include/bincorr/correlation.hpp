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
 * @file correlation.hpp
 * Covariance of the local observables X = Q_A x 1 and Y = 1 x R_B, where
 * Q_A = 1/2 (1 + x.sigma) and R_B = 1/2 (1 + y.sigma).
 *
 * Two independent routes are provided: covariance_direct() works on the
 * 4x4 matrices, covariance_via_C() uses the correlation matrix
 * C = F - a b^T, for which c(X, Y) = 1/4 x.C.y.
 */

#include <array>

#include "bincorr/linalg.hpp"
#include "bincorr/qstate.hpp"

namespace bincorr {

/// Bloch vectors (x, y) of the observables on A and B. Both lie in the
/// closed unit ball; throws BlochOutOfBall otherwise.
class ObservablePair {
 public:
  ObservablePair(const Vec3 &x, const Vec3 &y);

  const Vec3 &x() const { return x_; }
  const Vec3 &y() const { return y_; }

 private:
  Vec3 x_;
  Vec3 y_;
};

/// C together with its singular values and numeric rank (tolerance 1e-8),
/// computed once at construction.
class CorrMatrix {
 public:
  explicit CorrMatrix(const Mat3 &c);

  const Mat3 &matrix() const { return c_; }
  const std::array<double, 3> &singular_values() const { return sv_; }
  int rank() const { return rank_; }
  double det() const { return det3(c_); }

 private:
  Mat3 c_;
  std::array<double, 3> sv_;
  int rank_;
};

/// Tr(rho X Y) - Tr(rho_A Q) Tr(rho_B R), evaluated with matrix products.
double covariance_direct(const DensityMatrix &rho, const ObservablePair &pair);

/// C = F - a b^T from the Bloch form of rho.
CorrMatrix correlation_matrix(const DensityMatrix &rho);
CorrMatrix correlation_matrix(const BlochForm &bf);

/// 1/4 x.(C y)
double covariance_via_C(const CorrMatrix &cm, const ObservablePair &pair);

}  // namespace bincorr
