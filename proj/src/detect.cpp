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

#include "bincorr/detect.hpp"

#include <sstream>

#include "bincorr/error.hpp"
#include "bincorr/states.hpp"

namespace bincorr {

namespace {

constexpr double kGramTol = 1e-9;
constexpr double kSchmidtTol = 1e-9;

}  // namespace

std::string_view to_string(VerdictLabel label) {
  switch (label) {
    case VerdictLabel::Separable: return "Separable";
    case VerdictLabel::Entangled: return "Entangled";
    case VerdictLabel::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string_view to_string(VerdictBasis basis) {
  switch (basis) {
    case VerdictBasis::RankDichotomy: return "RankDichotomy";
    case VerdictBasis::BinaryProtocol: return "BinaryProtocol";
    case VerdictBasis::SchmidtOracle: return "SchmidtOracle";
    case VerdictBasis::PPTOracle: return "PPTOracle";
  }
  return "?";
}

CorrelationOracle exact_oracle(const DensityMatrix &rho) {
  return [rho](const ObservablePair &pair) {
    const double c = covariance_direct(rho, pair);
    return ProbeResult{c, std::abs(c) < kZeroCorrelationTol};
  };
}

double gram_determinant(const std::array<Vec3, 3> &xs) {
  const double d = det3(Mat3::from_rows(xs[0], xs[1], xs[2]));
  return d * d;
}

ObservablePair find_zero_correlation_pair(const DensityMatrix &rho, const Vec3 &y) {
  if (!y.is_finite()) throw Error(ErrorCode::NonFinite, "y is not finite");
  if (y.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "y must be non-zero");

  const CorrMatrix cm = correlation_matrix(rho);
  const Vec3 cy = cm.matrix() * y;
  if (cy.norm() < kZeroCorrelationTol) return ObservablePair(Vec3::unit(0), y);
  return ObservablePair(orthogonal_complement_basis(cy).first, y);
}

Verdict classify_by_rank(const CorrMatrix &cm) {
  std::ostringstream detail;
  detail.precision(17);
  detail << "rank(C) = " << cm.rank() << ", singular values (" << cm.singular_values()[0]
         << ", " << cm.singular_values()[1] << ", " << cm.singular_values()[2] << ")";
  switch (cm.rank()) {
    case 0: return {VerdictLabel::Separable, VerdictBasis::RankDichotomy, detail.str()};
    case 3: return {VerdictLabel::Entangled, VerdictBasis::RankDichotomy, detail.str()};
    default:
      throw Error(ErrorCode::RankContradiction,
                  detail.str() + "; a pure state admits only rank 0 or 3");
  }
}

Verdict classify_pure_by_rank(const PureState &psi) {
  return classify_by_rank(correlation_matrix(density_from_pure(psi)));
}

ProtocolResult binary_protocol(const DensityMatrix &rho, const Vec3 &y,
                               const std::array<Vec3, 3> &xs,
                               const CorrelationOracle &oracle, bool assume_pure) {
  if (!y.is_finite()) throw Error(ErrorCode::NonFinite, "y is not finite");
  if (y.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "y must be non-zero");
  const double gram = gram_determinant(xs);
  if (!(gram > kGramTol)) {
    std::ostringstream msg;
    msg << "probe vectors are linearly dependent (Gram determinant " << gram << ")";
    throw Error(ErrorCode::DependentProbes, msg.str());
  }

  ProtocolTrace trace;
  trace.y = y;
  int first_nonzero = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ProbeResult r = oracle(ObservablePair(xs[i], y));
    trace.probes.push_back({xs[i], r.covariance, r.is_zero});
    if (!r.is_zero) {
      first_nonzero = static_cast<int>(i) + 1;
      break;
    }
  }
  trace.measurements_used = first_nonzero ? first_nonzero : 3;

  const bool pure = rho.is_pure();
  std::ostringstream detail;
  Verdict verdict{VerdictLabel::Indeterminate, VerdictBasis::BinaryProtocol, {}};
  if (pure || assume_pure) {
    if (first_nonzero) {
      verdict.label = VerdictLabel::Entangled;
      detail << "non-zero correlation at probe " << first_nonzero;
    } else {
      verdict.label = VerdictLabel::Separable;
      detail << "zero correlation on all 3 independent probes";
    }
    if (!pure) detail << " (mixed input, pure semantics assumed)";
  } else if (first_nonzero) {
    detail << "non-zero correlation on mixed input (probe " << first_nonzero
           << "); this does not imply entanglement";
  } else {
    detail << "zero correlation on all 3 probes on mixed input; this does not imply "
              "separability";
  }
  verdict.detail = detail.str();
  return {verdict, trace};
}

int schmidt_rank(const PureState &psi) {
  // M = [[p0, p1], [p2, p3]]; sigma1^2 + sigma2^2 = |M|_F^2, sigma1 sigma2 = |det M|.
  const double fro2 = std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]) + std::norm(psi[3]);
  const double det = std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
  const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
  const double s1 = std::sqrt(0.5 * (fro2 + disc));
  const double s2 = s1 > 0.0 ? det / s1 : 0.0;
  return s2 > kSchmidtTol ? 2 : 1;
}

Verdict classify_by_schmidt(const PureState &psi) {
  const int r = schmidt_rank(psi);
  return {r == 1 ? VerdictLabel::Separable : VerdictLabel::Entangled, VerdictBasis::SchmidtOracle,
          "Schmidt rank " + std::to_string(r)};
}

CMat4 partial_transpose_B(const DensityMatrix &rho) {
  CMat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
  return out;
}

bool ppt_is_separable(const DensityMatrix &rho) {
  return hermitian_eigenvalues(partial_transpose_B(rho))[0] >= -kStateTol;
}

Verdict classify_by_ppt(const DensityMatrix &rho) {
  const double min_eig = hermitian_eigenvalues(partial_transpose_B(rho))[0];
  std::ostringstream detail;
  detail.precision(17);
  detail << "min eigenvalue of partial transpose = " << min_eig;
  return {min_eig >= -kStateTol ? VerdictLabel::Separable : VerdictLabel::Entangled,
          VerdictBasis::PPTOracle, detail.str()};
}

WernerReport werner_report(double xi, const ObservablePair &pair) {
  const DensityMatrix rho = werner(xi);
  return {xi, covariance_direct(rho, pair), -0.25 * xi * dot(pair.x(), pair.y()) + 0.0,
          ppt_is_separable(rho), correlation_matrix(rho)};
}

}  // namespace bincorr
