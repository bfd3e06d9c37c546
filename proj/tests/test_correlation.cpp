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

#include "bincorr/correlation.hpp"
#include "bincorr/error.hpp"
#include "bincorr/properties.hpp"
#include "bincorr/states.hpp"
#include "oracles.hpp"

using namespace bincorr;

namespace {

// Covariance from expectation values written out with explicit index sums.
double oracle_covariance(const DensityMatrix &rho, const Vec3 &x, const Vec3 &y) {
  const CMat2 q = observable_from_bloch(x);
  const CMat2 r = observable_from_bloch(y);
  const CMat2 one = CMat2::identity();
  const auto &m = rho.matrix();
  return (oracle::expectation(m, q, r) -
          oracle::expectation(m, q, one) * oracle::expectation(m, one, r))
      .real();
}

}  // namespace

TEST_CASE("ObservablePair enforces the unit ball") {
  CHECK_NOTHROW(ObservablePair({0, 0, 1}, {0.3, 0.3, 0.3}));
  try {
    ObservablePair({0, 0, 1.1}, {0, 0, 1});
    FAIL("expected BlochOutOfBall");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BlochOutOfBall);
  }
}

TEST_CASE("covariance_direct fixtures") {
  const DensityMatrix s = density_from_pure(bell_state(Bell::PsiMinus));
  CHECK(std::abs(covariance_direct(s, {{0, 0, 1}, {0, 0, 1}}) + 0.25) < 1e-15);
  CHECK(std::abs(covariance_direct(s, {{}, {0, 0, 1}})) < 1e-15);
  CHECK(std::abs(covariance_direct(werner(0.5), {{1, 0, 0}, {1, 0, 0}}) + 0.125) < 1e-15);
}

TEST_CASE("covariance_direct agrees with the index-sum oracle") {
  SplitMix64 rng(99);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DensityMatrix rho = random_density(seed);
    const Vec3 x = random_ball_vector(rng);
    const Vec3 y = random_unit_vector(rng);
    CHECK(std::abs(covariance_direct(rho, {x, y}) - oracle_covariance(rho, x, y)) < 1e-13);
  }
}

TEST_CASE("correlation_matrix fixtures") {
  const CorrMatrix s = correlation_matrix(density_from_pure(bell_state(Bell::PsiMinus)));
  CHECK(max_abs_diff(s.matrix(), -1.0 * Mat3::identity()) < 1e-15);
  CHECK(s.rank() == 3);
  CHECK(s.det() == doctest::Approx(-1.0));

  const CorrMatrix c = correlation_matrix(density_from_pure(chen_state()));
  const Mat3 want = (2.0 / 9.0) * Mat3::from_rows({1, 0, -2}, {0, -3, 0}, {2, 0, 2});
  CHECK(max_abs_diff(c.matrix(), want) < 1e-12);
  CHECK(c.rank() == 3);
  CHECK(std::abs(c.det() + 16.0 / 81.0) < 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CorrMatrix p = correlation_matrix(density_from_pure(random_product_pure(seed)));
    CHECK(max_abs_diff(p.matrix(), Mat3::zero()) < 1e-10);
    CHECK(p.rank() == 0);
  }

  for (double xi : {0.0, 0.3, 1.0}) {
    const CorrMatrix w = correlation_matrix(werner(xi));
    CHECK(max_abs_diff(w.matrix(), -xi * Mat3::identity()) < 1e-12);
  }
}

TEST_CASE("correlation_matrix from BlochForm matches the density route") {
  const DensityMatrix rho = random_density(3);
  CHECK(max_abs_diff(correlation_matrix(bloch_decompose(rho)).matrix(),
                     correlation_matrix(rho).matrix()) == 0.0);
}

TEST_CASE("covariance_via_C fixtures") {
  const CorrMatrix singlet(-1.0 * Mat3::identity());
  CHECK(covariance_via_C(singlet, {{0, 0, 1}, {0, 0, 1}}) == -0.25);
  CHECK(covariance_via_C(CorrMatrix(Mat3::zero()), {{0.1, 0.2, 0.3}, {1, 0, 0}}) == 0.0);

  const CorrMatrix chen = correlation_matrix(density_from_pure(chen_state()));
  const Vec3 x = (1.0 / std::sqrt(5.0)) * Vec3{2, 0, -1};
  CHECK(std::abs(covariance_via_C(chen, {x, {1, 0, 0}})) < 1e-15);
}

TEST_CASE("correlation property suites") {
  PropertyConfig cfg{300, 29};
  for (const auto &suite : property_suites()) {
    if (suite.module != "correlation") continue;
    const PropertyResult r = suite.run(cfg);
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
