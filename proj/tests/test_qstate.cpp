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
#include <functional>

#include "bincorr/error.hpp"
#include "bincorr/properties.hpp"
#include "bincorr/qstate.hpp"
#include "bincorr/states.hpp"
#include "oracles.hpp"

using namespace bincorr;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no bincorr::Error thrown");
  return ErrorCode::InvalidArgument;
}

CMat4 diag4(double a, double b, double c, double d) {
  CMat4 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

}  // namespace

TEST_CASE("pure state validation") {
  CHECK(code_of([] { PureState({1.0, 1.0, 0.0, 0.0}); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { PureState::normalize({0.0, 0.0, 0.0, 0.0}); }) == ErrorCode::ZeroVector);
  const PureState p = PureState::normalize({1.0, 1.0, 0.0, 0.0});
  CHECK(std::abs(p[0] - Complex(std::sqrt(0.5))) < 1e-15);
}

TEST_CASE("density matrix validation names the violated invariant") {
  CMat4 m = diag4(0.5, 0.5, 0.0, 0.0);
  CHECK_NOTHROW(DensityMatrix{m});

  m(0, 1) = 0.1;  // not Hermitian
  auto v = density_matrix_violation(m);
  REQUIRE(v);
  CHECK(v->find("Hermitian") != std::string::npos);

  v = density_matrix_violation(diag4(0.5, 0.6, 0.0, 0.0));
  REQUIRE(v);
  CHECK(v->find("trace") != std::string::npos);

  v = density_matrix_violation(diag4(1.2, -0.2, 0.0, 0.0));
  REQUIRE(v);
  CHECK(v->find("positive") != std::string::npos);

  CHECK(code_of([] { DensityMatrix(diag4(1.2, -0.2, 0.0, 0.0)); }) == ErrorCode::InvalidState);
}

TEST_CASE("density_from_pure fixtures") {
  const DensityMatrix d0 = density_from_pure(PureState({1.0, 0.0, 0.0, 0.0}));
  CHECK(max_abs_diff(d0.matrix(), diag4(1, 0, 0, 0)) == 0.0);

  CMat4 singlet;
  singlet(1, 1) = 0.5;
  singlet(2, 2) = 0.5;
  singlet(1, 2) = -0.5;
  singlet(2, 1) = -0.5;
  CHECK(max_abs_diff(density_from_pure(bell_state(Bell::PsiMinus)).matrix(), singlet) < 1e-15);

  const DensityMatrix chen = density_from_pure(chen_state());
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const double want = (r == 2 || c == 2) ? 0.0 : 1.0 / 3.0;
      CHECK(std::abs(chen(r, c) - want) < 1e-15);
    }
  CHECK(chen.is_pure());
}

TEST_CASE("bloch_decompose fixtures") {
  const BlochForm s = bloch_decompose(density_from_pure(bell_state(Bell::PsiMinus)));
  CHECK(max_abs_diff(s.a, Vec3{}) < 1e-15);
  CHECK(max_abs_diff(s.b, Vec3{}) < 1e-15);
  CHECK(max_abs_diff(s.f, -1.0 * Mat3::identity()) < 1e-15);

  const BlochForm c = bloch_decompose(density_from_pure(chen_state()));
  CHECK(max_abs_diff(c.a, Vec3{2.0 / 3, 0, 1.0 / 3}) < 1e-12);
  CHECK(max_abs_diff(c.b, Vec3{2.0 / 3, 0, -1.0 / 3}) < 1e-12);
  const Mat3 f = (1.0 / 3.0) * Mat3::from_rows({2, 0, -2}, {0, -2, 0}, {2, 0, 1});
  CHECK(max_abs_diff(c.f, f) < 1e-12);

  for (double xi : {0.0, 0.25, 0.7, 1.0}) {
    const BlochForm w = bloch_decompose(werner(xi));
    CHECK(max_abs_diff(w.a, Vec3{}) < 1e-12);
    CHECK(max_abs_diff(w.b, Vec3{}) < 1e-12);
    CHECK(max_abs_diff(w.f, -xi * Mat3::identity()) < 1e-12);
  }
}

TEST_CASE("bloch_decompose agrees with explicit index-sum traces") {
  const auto &paulis = pauli::all();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = random_density(seed);
    const BlochForm bf = bloch_decompose(rho);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::abs(oracle::expectation(rho.matrix(), paulis[i], pauli::identity()).real() -
                     bf.a[i]) < 1e-12);
      CHECK(std::abs(oracle::expectation(rho.matrix(), pauli::identity(), paulis[i]).real() -
                     bf.b[i]) < 1e-12);
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(std::abs(oracle::expectation(rho.matrix(), paulis[i], paulis[j]).real() -
                       bf.f(i, j)) < 1e-12);
    }
  }
}

TEST_CASE("bloch_assemble fixtures and errors") {
  const DensityMatrix s = bloch_assemble({{}, {}, -1.0 * Mat3::identity()});
  CHECK(max_abs_diff(s.matrix(), density_from_pure(bell_state(Bell::PsiMinus)).matrix()) <
        1e-15);

  const DensityMatrix mixed = bloch_assemble({{}, {}, Mat3::zero()});
  CHECK(max_abs_diff(mixed.matrix(), 0.25 * CMat4::identity()) == 0.0);

  const Vec3 z{0, 0, 1};
  const DensityMatrix prod = bloch_assemble({z, z, Mat3::outer(z, z)});
  CHECK(max_abs_diff(prod.matrix(), diag4(1, 0, 0, 0)) < 1e-15);

  // F = +I has eigenvalue -1/2: bounded entries, not a state.
  CHECK(code_of([] { bloch_assemble({{}, {}, Mat3::identity()}); }) == ErrorCode::NotPositive);
}

TEST_CASE("partial traces") {
  const DensityMatrix s = density_from_pure(bell_state(Bell::PsiMinus));
  CHECK(max_abs_diff(partial_trace_A(s), 0.5 * CMat2::identity()) < 1e-15);
  CHECK(max_abs_diff(partial_trace_B(s), 0.5 * CMat2::identity()) < 1e-15);

  CMat2 ra;
  ra(0, 0) = 0.7;
  ra(1, 1) = 0.3;
  ra(0, 1) = Complex(0.1, 0.2);
  ra(1, 0) = Complex(0.1, -0.2);
  const CMat2 rb = observable_from_bloch({0.3, -0.4, 0.5});
  const DensityMatrix p = product_density(ra, rb);
  CHECK(max_abs_diff(partial_trace_B(p), ra) < 1e-15);
  CHECK(max_abs_diff(partial_trace_A(p), rb) < 1e-15);

  const CMat2 rho_a = partial_trace_B(density_from_pure(chen_state()));
  CHECK(max_abs_diff(rho_a, observable_from_bloch({2.0 / 3, 0, 1.0 / 3})) < 1e-12);
}

TEST_CASE("observable_from_bloch") {
  CHECK(max_abs_diff(observable_from_bloch({}), 0.5 * CMat2::identity()) == 0.0);
  CMat2 p0;
  p0(0, 0) = 1.0;
  CHECK(max_abs_diff(observable_from_bloch({0, 0, 1}), p0) == 0.0);
  CMat2 h;
  h.e = {0.5, 0.5, 0.5, 0.5};
  CHECK(max_abs_diff(observable_from_bloch({1, 0, 0}), h) == 0.0);
  CHECK(code_of([] { observable_from_bloch({1.0, 1e-3, 0.0}); }) == ErrorCode::BlochOutOfBall);
}

TEST_CASE("joint_operator") {
  CHECK(joint_operator(CMat2::identity(), CMat2::identity()) == CMat4::identity());
  CHECK(max_abs_diff(joint_operator(pauli::z(), CMat2::identity()), diag4(1, 1, -1, -1)) == 0.0);
  const CMat2 p0 = observable_from_bloch({0, 0, 1});
  CHECK(max_abs_diff(joint_operator(p0, p0), diag4(1, 0, 0, 0)) == 0.0);
}

TEST_CASE("qstate property suites") {
  PropertyConfig cfg{300, 23};
  for (const auto &suite : property_suites()) {
    if (suite.module != "qstate") continue;
    const PropertyResult r = suite.run(cfg);
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
