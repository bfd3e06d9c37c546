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

#include "bincorr/shotsim.hpp"

#include <sstream>

#include "bincorr/error.hpp"
#include "bincorr/rng.hpp"

namespace bincorr {

namespace {

void require_unit(const Vec3 &v, const char *name) {
  if (std::abs(v.norm() - 1.0) > 1e-9)
    throw Error(ErrorCode::NonUnitBloch,
                std::string(name) + " must be a unit vector for projective sampling");
}

}  // namespace

void ShotConfig::validate() const {
  if (shots < 100) throw Error(ErrorCode::InvalidArgument, "shots must be at least 100");
  if (!(z_threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "z threshold must be positive");
}

std::array<double, 4> joint_outcome_probabilities(const DensityMatrix &rho,
                                                  const ObservablePair &pair) {
  const CMat2 one = CMat2::identity();
  const CMat2 qa1 = observable_from_bloch(pair.x());
  const CMat2 rb1 = observable_from_bloch(pair.y());
  const std::array<CMat2, 2> qa{one - qa1, qa1};
  const std::array<CMat2, 2> rb{one - rb1, rb1};

  std::array<double, 4> p{};
  double total = 0.0;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) {
      const double v = trace_of_product(rho.matrix(), kron(qa[s], rb[t])).real();
      p[2 * s + t] = std::max(0.0, v);
      total += p[2 * s + t];
    }
  for (auto &v : p) v /= total;
  return p;
}

// Delta method for g = m_st - m_s m_t with gradient (1, -m_t, -m_s), each of
// the three Bernoulli means contributing its own plug-in variance and
// cross-covariances dropped. This is the error of the three expectation
// values measured as separate runs. The full shared-stream delta method
// degenerates (first-order variance zero) for perfectly anticorrelated
// outcomes such as the singlet along a common axis.
double covariance_standard_error(const std::array<std::int64_t, 4> &counts) {
  const auto n = static_cast<double>(counts[0] + counts[1] + counts[2] + counts[3]);
  if (n <= 0.0) return 0.0;
  const double m_s = static_cast<double>(counts[2] + counts[3]) / n;
  const double m_t = static_cast<double>(counts[1] + counts[3]) / n;
  const double m_st = static_cast<double>(counts[3]) / n;
  const double var = m_st * (1.0 - m_st) + m_t * m_t * m_s * (1.0 - m_s) +
                     m_s * m_s * m_t * (1.0 - m_t);
  return std::sqrt(var / n);
}

ShotRecord sample_joint(const DensityMatrix &rho, const ObservablePair &pair,
                        const ShotConfig &cfg) {
  cfg.validate();
  require_unit(pair.x(), "x");
  require_unit(pair.y(), "y");

  const auto p = joint_outcome_probabilities(rho, pair);
  const double c0 = p[0];
  const double c1 = c0 + p[1];
  const double c2 = c1 + p[2];

  SplitMix64 rng(cfg.seed);
  ShotRecord rec;
  for (std::int64_t i = 0; i < cfg.shots; ++i) {
    const double u = rng.uniform();
    const std::size_t k = u < c0 ? 0 : u < c1 ? 1 : u < c2 ? 2 : 3;
    ++rec.counts[k];
  }

  const auto n = static_cast<double>(cfg.shots);
  rec.shots_used = cfg.shots;
  rec.estimate_x = static_cast<double>(rec.counts[2] + rec.counts[3]) / n;
  rec.estimate_y = static_cast<double>(rec.counts[1] + rec.counts[3]) / n;
  rec.estimate_xy = static_cast<double>(rec.counts[3]) / n;
  rec.covariance_estimate = rec.estimate_xy - rec.estimate_x * rec.estimate_y;
  rec.standard_error = covariance_standard_error(rec.counts);
  rec.decision = std::abs(rec.covariance_estimate) > cfg.z_threshold * rec.standard_error
                     ? ShotDecision::NonZero
                     : ShotDecision::Zero;
  return rec;
}

namespace {

CorrelationOracle make_sampling_oracle(const DensityMatrix &rho, const ShotConfig &cfg,
                                       std::vector<ShotRecord> *records) {
  cfg.validate();
  return [rho, cfg, records, probe = std::uint64_t{0}](const ObservablePair &pair) mutable {
    ShotConfig run = cfg;
    run.seed = cfg.seed + probe++;
    const ShotRecord rec = sample_joint(rho, pair, run);
    if (records) records->push_back(rec);
    return ProbeResult{rec.covariance_estimate, rec.decision == ShotDecision::Zero};
  };
}

}  // namespace

CorrelationOracle sampling_oracle(const DensityMatrix &rho, const ShotConfig &cfg) {
  return make_sampling_oracle(rho, cfg, nullptr);
}

ProtocolResult statistical_binary_protocol(const DensityMatrix &rho, const Vec3 &y,
                                           const std::array<Vec3, 3> &xs, const ShotConfig &cfg,
                                           bool assume_pure,
                                           std::vector<ShotRecord> *records) {
  cfg.validate();
  require_unit(y, "y");
  for (const auto &x : xs) require_unit(x, "probe x");

  ProtocolResult result = binary_protocol(rho, y, xs, make_sampling_oracle(rho, cfg, records), assume_pure);
  std::ostringstream detail;
  detail << result.verdict.detail << "; statistical call at " << cfg.shots
         << " shots per probe, z threshold " << cfg.z_threshold << ", seed " << cfg.seed
         << " (confidence, not certainty)";
  result.verdict.detail = detail.str();
  return result;
}

}  // namespace bincorr
