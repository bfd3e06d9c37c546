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

#include "bincorr/qstate.hpp"

#include <sstream>

#include "bincorr/error.hpp"

namespace bincorr {

namespace pauli {

CMat2 identity() { return CMat2::identity(); }

CMat2 x() {
  CMat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMat2 y() {
  CMat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

CMat2 z() {
  CMat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

const std::array<CMat2, 3> &all() {
  static const std::array<CMat2, 3> sigmas{x(), y(), z()};
  return sigmas;
}

CMat2 dot(const Vec3 &v) {
  const auto &s = all();
  return Complex(v[0]) * s[0] + Complex(v[1]) * s[1] + Complex(v[2]) * s[2];
}

}  // namespace pauli

namespace {

double real_trace(const CMat4 &rho, const CMat4 &op, const char *name) {
  const Complex t = trace_of_product(rho, op);
  if (std::abs(t.imag()) > kImagResidueTol) {
    std::ostringstream msg;
    msg << "imaginary residue " << t.imag() << " in Tr(rho " << name << ")";
    throw Error(ErrorCode::InvalidState, msg.str());
  }
  return t.real();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

}  // namespace

PureState::PureState(const std::array<Complex, 4> &amplitudes) : amps_(amplitudes) {
  double norm2 = 0.0;
  for (const auto &z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, "amplitude is not finite");
    norm2 += std::norm(z);
  }
  if (std::abs(norm2 - 1.0) > kStateTol)
    throw Error(ErrorCode::NotNormalized, "squared norm is " + fmt(norm2) + ", expected 1");
}

PureState PureState::normalize(std::array<Complex, 4> amplitudes) {
  double norm2 = 0.0;
  for (const auto &z : amplitudes) norm2 += std::norm(z);
  if (!std::isfinite(norm2)) throw Error(ErrorCode::NonFinite, "amplitude is not finite");
  if (norm2 == 0.0) throw Error(ErrorCode::ZeroVector, "cannot normalise the zero state");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto &z : amplitudes) z *= inv;
  return PureState(amplitudes);
}

std::optional<std::string> density_matrix_violation(const CMat4 &m) {
  if (!m.is_finite()) return "finite entries";
  const double defect = m.hermitian_defect();
  if (defect > kStateTol) return "Hermitian (max |rho - rho^H| = " + fmt(defect) + ")";
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kStateTol)
    return "unit trace (trace = " + fmt(tr.real()) + ")";
  const double min_eig = hermitian_eigenvalues(m)[0];
  if (min_eig < -kStateTol)
    return "positive semidefinite (min eigenvalue = " + fmt(min_eig) + ")";
  return std::nullopt;
}

DensityMatrix::DensityMatrix(const CMat4 &rho) : rho_(rho) {
  if (auto violation = density_matrix_violation(rho_))
    throw Error(ErrorCode::InvalidState, "density matrix must be " + *violation);
}

double DensityMatrix::purity() const { return trace_of_product(rho_, rho_).real(); }

bool DensityMatrix::is_pure() const { return std::abs(purity() - 1.0) <= kStateTol; }

DensityMatrix density_from_pure(const PureState &psi) {
  CMat4 rho;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
  return DensityMatrix(rho);
}

BlochForm bloch_decompose(const DensityMatrix &rho) {
  static const char *names[] = {"x", "y", "z"};
  const auto &s = pauli::all();
  const CMat2 one = pauli::identity();
  const CMat4 &m = rho.matrix();

  BlochForm bf;
  for (std::size_t i = 0; i < 3; ++i) {
    bf.a[i] = real_trace(m, kron(s[i], one), names[i]);
    bf.b[i] = real_trace(m, kron(one, s[i]), names[i]);
    for (std::size_t j = 0; j < 3; ++j) bf.f(i, j) = real_trace(m, kron(s[i], s[j]), names[j]);
  }
  return bf;
}

DensityMatrix bloch_assemble(const BlochForm &bf) {
  if (!bf.a.is_finite() || !bf.b.is_finite() || !bf.f.is_finite())
    throw Error(ErrorCode::NonFinite, "Bloch form has non-finite components");

  const auto &s = pauli::all();
  const CMat2 one = pauli::identity();
  CMat4 m = CMat4::identity();
  m = m + kron(pauli::dot(bf.a), one) + kron(one, pauli::dot(bf.b));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m = m + Complex(bf.f(i, j)) * kron(s[i], s[j]);
  m = Complex(0.25) * m;

  const double min_eig = hermitian_eigenvalues(m)[0];
  if (min_eig < -kStateTol)
    throw Error(ErrorCode::NotPositive,
                "assembled matrix has eigenvalue " + fmt(min_eig));
  return DensityMatrix(m);
}

CMat2 partial_trace_A(const DensityMatrix &rho) {
  CMat2 out;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l)
      out(k, l) = rho(k, l) + rho(2 + k, 2 + l);
  return out;
}

CMat2 partial_trace_B(const DensityMatrix &rho) {
  CMat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

QubitOperator observable_from_bloch(const Vec3 &x) {
  if (!x.is_finite()) throw Error(ErrorCode::NonFinite, "Bloch vector is not finite");
  if (x.norm() > 1.0 + 1e-12)
    throw Error(ErrorCode::BlochOutOfBall, "|x| = " + fmt(x.norm()) + " exceeds 1");
  return Complex(0.5) * (pauli::identity() + pauli::dot(x));
}

CMat4 joint_operator(const QubitOperator &q, const QubitOperator &r) { return kron(q, r); }

DensityMatrix product_density(const CMat2 &rho_a, const CMat2 &rho_b) {
  return DensityMatrix(kron(rho_a, rho_b));
}

}  // namespace bincorr
