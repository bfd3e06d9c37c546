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

#include <doctest.h>

#include <cmath>

#include "bincorr/detect.hpp"
#include "bincorr/error.hpp"
#include "bincorr/properties.hpp"
#include "bincorr/states.hpp"
#include "oracles.hpp"

using namespace bincorr;

namespace {

DensityMatrix singlet() { return density_from_pure(bell_state(Bell::PsiMinus)); }

// Independent PPT check: partial transpose by index relabeling, spectrum by
// Eigen.
double oracle_min_pt_eigenvalue(const DensityMatrix &rho) {
  CMat4 pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) pt(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return oracle::hermitian_eigenvalues(pt)[0];
}

}  // namespace

TEST_CASE("find_zero_correlation_pair") {
  const ObservablePair s = find_zero_correlation_pair(singlet(), {0, 0, 1});
  CHECK(std::abs(dot(s.x(), {0, 0, 1})) < 1e-12);
  CHECK(std::abs(covariance_direct(singlet(), s)) < 1e-10);

  const DensityMatrix chen = density_from_pure(chen_state());
  const ObservablePair c = find_zero_correlation_pair(chen, {1, 0, 0});
  // x must lie in span{(2,0,-1), (0,1,0)}: orthogonal to (1,0,2).
  CHECK(std::abs(dot(c.x(), {1, 0, 2})) < 1e-12);
  CHECK(std::abs(c.x().norm() - 1.0) < 1e-12);
  CHECK(std::abs(covariance_direct(chen, c)) < 1e-10);

  const DensityMatrix prod = density_from_pure(random_product_pure(4));
  const ObservablePair p = find_zero_correlation_pair(prod, {0.6, 0, 0.8});
  CHECK(p.x() == Vec3::unit(0));

  try {
    find_zero_correlation_pair(singlet(), {});
    FAIL("expected ZeroVector");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("classify_pure_by_rank") {
  CHECK(classify_pure_by_rank(PureState({1.0, 0.0, 0.0, 0.0})).label == VerdictLabel::Separable);
  CHECK(classify_pure_by_rank(bell_state(Bell::PsiMinus)).label == VerdictLabel::Entangled);
  const Verdict v = classify_pure_by_rank(chen_state());
  CHECK(v.label == VerdictLabel::Entangled);
  CHECK(v.basis == VerdictBasis::RankDichotomy);

  try {
    classify_by_rank(CorrMatrix(Mat3::diagonal(1, 0, 0)));
    FAIL("expected RankContradiction");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::RankContradiction);
  }
}

TEST_CASE("binary_protocol fixtures") {
  const ProtocolResult s =
      binary_protocol(singlet(), kDefaultProbeY, kDefaultProbeXs, exact_oracle(singlet()));
  CHECK(s.verdict.label == VerdictLabel::Entangled);
  CHECK(s.trace.measurements_used == 3);
  REQUIRE(s.trace.probes.size() == 3);
  CHECK(s.trace.probes[0].is_zero);
  CHECK(s.trace.probes[1].is_zero);
  CHECK(std::abs(s.trace.probes[2].covariance + 0.25) < 1e-15);

  const DensityMatrix prod = density_from_pure(random_product_pure(12));
  const ProtocolResult p = binary_protocol(prod, {0.6, 0.8, 0}, kDefaultProbeXs, exact_oracle(prod));
  CHECK(p.verdict.label == VerdictLabel::Separable);
  CHECK(p.trace.measurements_used == 3);

  const DensityMatrix w = werner(0.2);
  const ProtocolResult m = binary_protocol(w, kDefaultProbeY, kDefaultProbeXs, exact_oracle(w));
  CHECK(m.verdict.label == VerdictLabel::Indeterminate);
  CHECK(m.verdict.detail.find("non-zero correlation on mixed input") != std::string::npos);
  CHECK(m.trace.measurements_used == 3);

  const ProtocolResult a =
      binary_protocol(w, kDefaultProbeY, kDefaultProbeXs, exact_oracle(w), true);
  CHECK(a.verdict.label == VerdictLabel::Entangled);
}

TEST_CASE("binary_protocol errors") {
  const auto oracle = exact_oracle(singlet());
  try {
    binary_protocol(singlet(), {}, kDefaultProbeXs, oracle);
    FAIL("expected ZeroVector");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
  try {
    binary_protocol(singlet(), {0, 0, 1}, {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 1, 0}}, oracle);
    FAIL("expected DependentProbes");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::DependentProbes);
  }
}

TEST_CASE("schmidt rank") {
  CHECK(schmidt_rank(PureState({1.0, 0.0, 0.0, 0.0})) == 1);
  CHECK(schmidt_rank(bell_state(Bell::PsiMinus)) == 2);
  CHECK(schmidt_rank(chen_state()) == 2);
  CHECK(schmidt_rank(near_product_pure(1e-3)) == 2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(schmidt_rank(random_product_pure(seed)) == 1);
}

TEST_CASE("ppt oracle") {
  CHECK(ppt_is_separable(werner(0.0)));
  CHECK_FALSE(ppt_is_separable(singlet()));
  CHECK(ppt_is_separable(werner(1.0 / 3.0)));
  CHECK_FALSE(ppt_is_separable(werner(1.0 / 3.0 + 1e-3)));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_density(seed);
    const double ref = oracle_min_pt_eigenvalue(rho);
    CHECK(std::abs(hermitian_eigenvalues(partial_transpose_B(rho))[0] - ref) < 1e-10);
    if (std::abs(ref) > 1e-6) CHECK(ppt_is_separable(rho) == (ref >= 0.0));
  }
}

TEST_CASE("werner_report") {
  const WernerReport r0 = werner_report(0.0, {{0.3, 0.1, 0}, {0, 0, 1}});
  CHECK(r0.covariance == doctest::Approx(0.0));
  CHECK(r0.ppt_separable);

  const WernerReport r1 = werner_report(1.0, {{0, 0, 1}, {0, 0, 1}});
  CHECK(std::abs(r1.covariance + 0.25) < 1e-12);
  CHECK_FALSE(r1.ppt_separable);

  for (double xi : {0.2, 0.5}) {
    const WernerReport r = werner_report(xi, {{1, 0, 0}, {0, 1, 0}});
    CHECK(std::abs(r.covariance) < 1e-12);
    CHECK(r.ppt_separable == (xi < 1.0 / 3.0));
    CHECK(max_abs_diff(r.c_matrix.matrix(), -xi * Mat3::identity()) < 1e-12);
  }

  try {
    werner_report(1.5, {{1, 0, 0}, {1, 0, 0}});
    FAIL("expected XiOutOfRange");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::XiOutOfRange);
  }
}

TEST_CASE("detect property suites") {
  PropertyConfig cfg{300, 31};
  for (const auto &suite : property_suites()) {
    if (suite.module != "detect") continue;
    const PropertyResult r = suite.run(cfg);
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
