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

#include "bincorr/correlation.hpp"

#include "bincorr/error.hpp"

namespace bincorr {

namespace {

double real_part(Complex z, const char *what) {
  if (std::abs(z.imag()) > kImagResidueTol)
    throw Error(ErrorCode::InvalidState, std::string("imaginary residue in ") + what);
  return z.real();
}

void check_ball(const Vec3 &v, const char *name) {
  if (!v.is_finite()) throw Error(ErrorCode::NonFinite, std::string(name) + " is not finite");
  if (v.norm() > 1.0 + 1e-12)
    throw Error(ErrorCode::BlochOutOfBall, std::string(name) + " lies outside the unit ball");
}

}  // namespace

ObservablePair::ObservablePair(const Vec3 &x, const Vec3 &y) : x_(x), y_(y) {
  check_ball(x_, "x");
  check_ball(y_, "y");
}

CorrMatrix::CorrMatrix(const Mat3 &c)
    : c_(c),
      sv_(bincorr::singular_values(c)),
      rank_(numeric_rank_from_singular_values(sv_, kDefaultRankTol)) {}

double covariance_direct(const DensityMatrix &rho, const ObservablePair &pair) {
  const QubitOperator q = observable_from_bloch(pair.x());
  const QubitOperator r = observable_from_bloch(pair.y());
  const CMat2 one = CMat2::identity();

  const CMat4 xy = joint_operator(q, one) * joint_operator(one, r);
  const double joint = real_part(trace_of_product(rho.matrix(), xy), "Tr(rho X Y)");
  const double ex = real_part(trace_of_product(partial_trace_B(rho), q), "Tr(rho_A Q)");
  const double ey = real_part(trace_of_product(partial_trace_A(rho), r), "Tr(rho_B R)");
  return joint - ex * ey;
}

CorrMatrix correlation_matrix(const BlochForm &bf) {
  return CorrMatrix(bf.f - Mat3::outer(bf.a, bf.b));
}

CorrMatrix correlation_matrix(const DensityMatrix &rho) {
  return correlation_matrix(bloch_decompose(rho));
}

double covariance_via_C(const CorrMatrix &cm, const ObservablePair &pair) {
  return 0.25 * dot(pair.x(), cm.matrix() * pair.y());
}

}  // namespace bincorr
