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
 * @file detect.hpp
 * Separability decisions from zero / non-zero correlation answers.
 *
 * For a pure two-qubit state C is either zero (product state) or regular
 * (entangled). Fixing Y, the X giving zero correlation are exactly those
 * with x orthogonal to C.y, a plane that holds at most two independent
 * vectors; three independent probes therefore always expose entanglement.
 * None of this carries over to mixed states, so the protocol refuses to
 * give a verdict there unless told the input is pure.
 *
 * schmidt_rank() and ppt_is_separable() are ground-truth oracles that do not
 * go through C.
 */

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bincorr/correlation.hpp"
#include "bincorr/qstate.hpp"

namespace bincorr {

/// |c| below this counts as zero for exact (noise-free) correlations.
inline constexpr double kZeroCorrelationTol = 1e-10;

enum class VerdictLabel { Separable, Entangled, Indeterminate };
enum class VerdictBasis { RankDichotomy, BinaryProtocol, SchmidtOracle, PPTOracle };

std::string_view to_string(VerdictLabel label);
std::string_view to_string(VerdictBasis basis);

struct Verdict {
  VerdictLabel label;
  VerdictBasis basis;
  std::string detail;
};

/// Binary answer for one correlation measurement, with the value it was based on.
struct ProbeResult {
  double covariance;
  bool is_zero;
};

using CorrelationOracle = std::function<ProbeResult(const ObservablePair &)>;

/// covariance_direct() with the 1e-10 zero threshold.
CorrelationOracle exact_oracle(const DensityMatrix &rho);

struct ProtocolProbe {
  Vec3 x;
  double covariance;
  bool is_zero;
};

struct ProtocolTrace {
  Vec3 y;
  std::vector<ProtocolProbe> probes;
  int measurements_used = 0;
};

struct ProtocolResult {
  Verdict verdict;
  ProtocolTrace trace;
};

/// y = z-hat and the standard basis, reproducing the worked examples.
inline constexpr Vec3 kDefaultProbeY{0.0, 0.0, 1.0};
inline constexpr std::array<Vec3, 3> kDefaultProbeXs{Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0},
                                                     Vec3{0.0, 0.0, 1.0}};

/// Gram determinant of three vectors, det(X X^T) = det(X)^2.
double gram_determinant(const std::array<Vec3, 3> &xs);

/// Returns (x, y) with vanishing covariance: x is a unit vector orthogonal to
/// C.y, or e1 when C.y vanishes. Requires 0 < |y| <= 1.
ObservablePair find_zero_correlation_pair(const DensityMatrix &rho, const Vec3 &y);

/// Separable iff rank(C) = 0, Entangled iff rank(C) = 3. Ranks 1 and 2 cannot
/// occur for a pure state and raise RankContradiction.
Verdict classify_pure_by_rank(const PureState &psi);
Verdict classify_by_rank(const CorrMatrix &cm);

/**
 * Probes `xs` in order against the fixed `y`, stopping at the first non-zero
 * answer from `oracle`.
 *
 * On a pure input (or with `assume_pure`) a non-zero answer means Entangled
 * and three zeros mean Separable. On a mixed input the label is always
 * Indeterminate and `detail` reports what was observed.
 *
 * Throws ZeroVector for y = 0 and DependentProbes when the Gram determinant
 * of `xs` is not above 1e-9.
 */
ProtocolResult binary_protocol(const DensityMatrix &rho, const Vec3 &y,
                               const std::array<Vec3, 3> &xs,
                               const CorrelationOracle &oracle, bool assume_pure = false);

/// Rank (1 or 2) of the 2x2 amplitude matrix M_ij = <a_i b_j|psi>, threshold 1e-9.
int schmidt_rank(const PureState &psi);
Verdict classify_by_schmidt(const PureState &psi);

/// Transpose on subsystem B.
CMat4 partial_transpose_B(const DensityMatrix &rho);

/// Smallest eigenvalue of the partial transpose is >= -1e-9.
bool ppt_is_separable(const DensityMatrix &rho);
Verdict classify_by_ppt(const DensityMatrix &rho);

struct WernerReport {
  double xi;
  double covariance;
  double reference;  // -xi/4 x.y
  bool ppt_separable;
  CorrMatrix c_matrix;
};

/// Throws XiOutOfRange unless 0 <= xi <= 1.
WernerReport werner_report(double xi, const ObservablePair &pair);

}  // namespace bincorr
