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
 * @file shotsim.hpp
 * Finite-shot estimation of the zero / non-zero correlation answer.
 *
 * With unit Bloch vectors, Q_A and R_B are rank-1 projectors with outcomes
 * s, t in {0, 1}. Because X and Y act on different qubits they commute and
 * each shot draws a joint outcome (s, t) with probability
 * Tr(rho P_s x P_t). The covariance estimate is mean(st) - mean(s) mean(t),
 * all three means taken from the same shot stream.
 *
 * Sampling is inverse-CDF over the joint probabilities in the order
 * (0,0), (0,1), (1,0), (1,1), driven by SplitMix64::uniform().
 */

#include <array>
#include <cstdint>
#include <vector>

#include "bincorr/correlation.hpp"
#include "bincorr/detect.hpp"
#include "bincorr/qstate.hpp"

namespace bincorr {

struct ShotConfig {
  std::int64_t shots = 100000;
  std::uint64_t seed = 0;
  double z_threshold = 5.0;

  /// Throws InvalidArgument unless shots >= 100 and z_threshold > 0.
  void validate() const;
};

enum class ShotDecision { Zero, NonZero };

struct ShotRecord {
  double estimate_xy = 0.0;
  double estimate_x = 0.0;
  double estimate_y = 0.0;
  double covariance_estimate = 0.0;
  double standard_error = 0.0;
  ShotDecision decision = ShotDecision::Zero;
  std::int64_t shots_used = 0;
  /// Outcome counts n[2 s + t].
  std::array<std::int64_t, 4> counts{};
};

/// Joint outcome probabilities p[2 s + t] = Tr(rho P_s x P_t).
std::array<double, 4> joint_outcome_probabilities(const DensityMatrix &rho,
                                                  const ObservablePair &pair);

/// Standard error of mean(st) - mean(s) mean(t) from outcome counts (see
/// the definition for the estimator used).
double covariance_standard_error(const std::array<std::int64_t, 4> &counts);

/// Throws NonUnitBloch when |x| or |y| differs from 1 by more than 1e-9.
ShotRecord sample_joint(const DensityMatrix &rho, const ObservablePair &pair,
                        const ShotConfig &cfg);

/// Oracle answering probe i with sample_joint seeded by cfg.seed + i.
CorrelationOracle sampling_oracle(const DensityMatrix &rho, const ShotConfig &cfg);

/// binary_protocol() with sampled zero / non-zero calls. Probe vectors must be
/// unit length. The verdict is a statistical call and its detail says so.
/// When `records` is given, the ShotRecord of every probe is appended to it.
ProtocolResult statistical_binary_protocol(const DensityMatrix &rho, const Vec3 &y,
                                           const std::array<Vec3, 3> &xs, const ShotConfig &cfg,
                                           bool assume_pure = false,
                                           std::vector<ShotRecord> *records = nullptr);

}  // namespace bincorr
