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

#include "bincorr/states.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "bincorr/error.hpp"

namespace bincorr {

using nlohmann::json;

namespace {

CMat2 qubit_density(const Vec3 &r) { return Complex(0.5) * (pauli::identity() + pauli::dot(r)); }

std::array<Complex, 2> haar_qubit(SplitMix64 &rng) {
  Complex u(rng.normal(), rng.normal());
  Complex v(rng.normal(), rng.normal());
  const double n = std::sqrt(std::norm(u) + std::norm(v));
  return {u / n, v / n};
}

std::vector<double> simplex_weights(SplitMix64 &rng, int k) {
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto &x : w) total += (x = rng.exponential());
  for (auto &x : w) x /= total;
  return w;
}

void require_components(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "mixture needs at least one component");
}

[[noreturn]] void parse_fail(const std::string &what) { throw Error(ErrorCode::ParseError, what); }

Complex parse_complex(const json &pair, const std::string &where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
    parse_fail(where + ": expected a [re, im] number pair");
  return {pair[0].get<double>(), pair[1].get<double>()};
}

json complex_to_json(const Complex &z) { return json::array({z.real(), z.imag()}); }

}  // namespace

PureState bell_state(Bell which) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (which) {
    case Bell::PhiPlus: return PureState({h, 0.0, 0.0, h});
    case Bell::PhiMinus: return PureState({h, 0.0, 0.0, -h});
    case Bell::PsiPlus: return PureState({0.0, h, h, 0.0});
    case Bell::PsiMinus: return PureState({0.0, h, -h, 0.0});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Bell state");
}

PureState chen_state() {
  const double t = 1.0 / std::sqrt(3.0);
  return PureState({t, t, 0.0, t});
}

DensityMatrix werner(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0))
    throw Error(ErrorCode::XiOutOfRange, "xi must lie in [0, 1]");
  const double q = 0.25;
  CMat4 m;
  m(0, 0) = q * (1.0 - xi);
  m(1, 1) = q * (1.0 + xi);
  m(2, 2) = q * (1.0 + xi);
  m(3, 3) = q * (1.0 - xi);
  m(1, 2) = -q * 2.0 * xi;
  m(2, 1) = -q * 2.0 * xi;
  return DensityMatrix(m);
}

PureState near_product_pure(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "eps must lie in [0, 1]");
  return PureState({std::sqrt(1.0 - eps * eps), 0.0, 0.0, eps});
}

Vec3 random_unit_vector(SplitMix64 &rng) {
  for (;;) {
    const Vec3 g{rng.normal(), rng.normal(), rng.normal()};
    const double n = g.norm();
    if (n > 1e-12) return (1.0 / n) * g;
  }
}

Vec3 random_ball_vector(SplitMix64 &rng) {
  const Vec3 dir = random_unit_vector(rng);
  return std::cbrt(rng.uniform()) * dir;
}

PureState haar_random_pure(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<Complex, 4> amps;
  for (auto &z : amps) z = Complex(rng.normal(), rng.normal());
  return PureState::normalize(amps);
}

PureState random_product_pure(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto u = haar_qubit(rng);
  const auto v = haar_qubit(rng);
  return PureState::normalize({u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]});
}

DensityMatrix random_separable_mixed(std::uint64_t seed, int k) {
  require_components(k);
  SplitMix64 rng(seed);
  const auto w = simplex_weights(rng, k);
  CMat4 m;
  for (int i = 0; i < k; ++i) {
    const CMat2 ra = qubit_density(random_unit_vector(rng));
    const CMat2 rb = qubit_density(random_unit_vector(rng));
    m = m + Complex(w[static_cast<std::size_t>(i)]) * kron(ra, rb);
  }
  return DensityMatrix(m);
}

DensityMatrix random_pure_mixture(std::uint64_t seed, int k) {
  require_components(k);
  SplitMix64 rng(seed);
  const auto w = simplex_weights(rng, k);
  CMat4 m;
  for (int i = 0; i < k; ++i) {
    const PureState psi = haar_random_pure(rng.next());
    m = m + Complex(w[static_cast<std::size_t>(i)]) * density_from_pure(psi).matrix();
  }
  return DensityMatrix(m);
}

DensityMatrix StateSpec::density() const {
  if (const auto *psi = std::get_if<PureState>(&state)) return density_from_pure(*psi);
  return std::get<DensityMatrix>(state);
}

json to_json(const StateSpec &spec) {
  json doc;
  if (const auto *psi = std::get_if<PureState>(&spec.state)) {
    doc["kind"] = "pure";
    json amps = json::array();
    for (const auto &z : psi->amplitudes()) amps.push_back(complex_to_json(z));
    doc["amplitudes"] = std::move(amps);
  } else {
    const auto &rho = std::get<DensityMatrix>(spec.state);
    doc["kind"] = "mixed";
    json rows = json::array();
    for (std::size_t r = 0; r < 4; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < 4; ++c) row.push_back(complex_to_json(rho(r, c)));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  }
  if (spec.label) doc["label"] = *spec.label;
  return doc;
}

StateSpec state_spec_from_json(const json &doc) {
  if (!doc.is_object()) parse_fail("state document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) parse_fail("missing string field 'kind'");

  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) parse_fail("'label' must be a string");
    label = doc["label"].get<std::string>();
  }

  const auto kind = doc["kind"].get<std::string>();
  if (kind == "pure") {
    if (!doc.contains("amplitudes")) parse_fail("pure state needs 'amplitudes'");
    const json &amps = doc["amplitudes"];
    if (!amps.is_array() || amps.size() != 4) parse_fail("'amplitudes' must hold 4 entries");
    std::array<Complex, 4> a;
    for (std::size_t i = 0; i < 4; ++i)
      a[i] = parse_complex(amps[i], "amplitudes[" + std::to_string(i) + "]");
    return {label, PureState(a)};
  }
  if (kind == "mixed") {
    if (!doc.contains("matrix")) parse_fail("mixed state needs 'matrix'");
    const json &rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != 4) parse_fail("'matrix' must hold 4 rows");
    CMat4 m;
    for (std::size_t r = 0; r < 4; ++r) {
      if (!rows[r].is_array() || rows[r].size() != 4)
        parse_fail("matrix row " + std::to_string(r) + " must hold 4 entries");
      for (std::size_t c = 0; c < 4; ++c)
        m(r, c) = parse_complex(rows[r][c],
                                "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return {label, DensityMatrix(m)};
  }
  parse_fail("'kind' must be \"pure\" or \"mixed\", got \"" + kind + "\"");
}

StateSpec parse_state_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    parse_fail(e.what());
  }
  return state_spec_from_json(doc);
}

std::string dump_state_spec(const StateSpec &spec) { return to_json(spec).dump(2) + "\n"; }

StateSpec read_state_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_spec(buf.str());
}

void write_state_file(const std::filesystem::path &path, const StateSpec &spec) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << dump_state_spec(spec);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace bincorr
