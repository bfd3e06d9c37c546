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

#include "bincorr/properties.hpp"

#include <sstream>

#include "bincorr/correlation.hpp"
#include "bincorr/detect.hpp"
#include "bincorr/error.hpp"
#include "bincorr/report.hpp"
#include "bincorr/shotsim.hpp"
#include "bincorr/states.hpp"

namespace bincorr {

namespace {

/// Tracks the worst residual against a bound over many trials.
class Residual {
 public:
  Residual(std::string what, double bound) : what_(std::move(what)), bound_(bound) {}

  void observe(double r) {
    ++count_;
    if (!(r <= bound_)) ++failures_;
    if (!(r <= worst_)) worst_ = r;
  }

  bool ok() const { return failures_ == 0; }

  std::string summary() const {
    std::ostringstream s;
    s.precision(3);
    s << what_ << ": worst " << worst_ << " (bound " << bound_ << "), " << failures_ << "/"
      << count_ << " exceeded";
    return s.str();
  }

 private:
  std::string what_;
  double bound_;
  double worst_ = 0.0;
  long count_ = 0;
  long failures_ = 0;
};

PropertyResult finish(const char *module, const char *name,
                      std::initializer_list<const Residual *> checks) {
  PropertyResult r{module, name, true, {}};
  for (const Residual *c : checks) {
    r.passed = r.passed && c->ok();
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += c->summary();
  }
  return r;
}

PropertyResult counted(const char *module, const char *name, long bad, long total,
                       const std::string &what) {
  std::ostringstream s;
  s << bad << "/" << total << " " << what;
  return {module, name, bad == 0, s.str()};
}

/// Independent per-suite seed stream.
SplitMix64 suite_rng(const PropertyConfig &cfg, std::uint64_t tag) {
  SplitMix64 mix(cfg.seed ^ (tag * 0x9e3779b97f4a7c15ULL));
  return SplitMix64(mix.next());
}

// linalg

PropertyResult eigen_completeness(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 1);
  Residual recon("reconstruction", 1e-8), trace("trace", 1e-9);
  for (int t = 0; t < cfg.trials; ++t) {
    const CMat4 h = random_hermitian(rng);
    const auto es = hermitian_eigensystem(h);
    CMat4 d;
    for (std::size_t i = 0; i < 4; ++i) d(i, i) = es.values[i];
    recon.observe(max_abs_diff(es.vectors * d * es.vectors.adjoint(), h));
    trace.observe(std::abs(es.values[0] + es.values[1] + es.values[2] + es.values[3] -
                           h.trace().real()));
  }
  return finish("linalg", "eigen_completeness", {&recon, &trace});
}

PropertyResult sv_transpose(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 2);
  Residual r("|sv(m) - sv(m^T)|", 1e-10);
  for (int t = 0; t < cfg.trials; ++t) {
    const Mat3 m = random_mat3(rng);
    const auto a = singular_values(m);
    const auto b = singular_values(m.transpose());
    r.observe(std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])}));
  }
  return finish("linalg", "sv_transpose", {&r});
}

PropertyResult det_vs_singular_values(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 3);
  Residual r("||det| - prod(sv)| relative", 1e-9);
  for (int t = 0; t < cfg.trials; ++t) {
    const Mat3 m = random_mat3(rng);
    const auto sv = singular_values(m);
    const double prod = sv[0] * sv[1] * sv[2];
    r.observe(std::abs(std::abs(det3(m)) - prod) / std::max(1.0, prod));
  }
  return finish("linalg", "det_vs_singular_values", {&r});
}

PropertyResult rank_monotone(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 4);
  const std::array<double, 7> tols{1e-14, 1e-10, 1e-8, 1e-4, 0.1, 1.0, 10.0};
  long bad = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    Mat3 m = random_mat3(rng);
    switch (t % 4) {
      case 1: m = Mat3::outer(random_unit_vector(rng), random_unit_vector(rng)); break;
      case 2:
        m = Mat3::outer(random_unit_vector(rng), random_unit_vector(rng)) +
            Mat3::outer(random_unit_vector(rng), random_unit_vector(rng));
        break;
      case 3: m = 1e-6 * m; break;
      default: break;
    }
    int prev = 4;
    for (double tol : tols) {
      const int r = numeric_rank(m, tol);
      if (r > prev) ++bad;
      prev = r;
    }
  }
  return counted("linalg", "rank_monotone", bad, cfg.trials, "matrices with rank increasing in tolerance");
}

// qstate

PropertyResult bloch_round_trip(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 10);
  Residual r("|assemble(decompose(rho)) - rho|", 1e-10);
  for (int t = 0; t < cfg.trials; ++t) {
    const DensityMatrix rho = random_density(rng.next());
    r.observe(max_abs_diff(bloch_assemble(bloch_decompose(rho)).matrix(), rho.matrix()));
  }
  return finish("qstate", "bloch_round_trip", {&r});
}

PropertyResult pure_state_properties(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 11);
  Residual fb("|F b - a|", 1e-9), fta("|F^T a - b|", 1e-9), len("||a| - |b||", 1e-9),
      det("|det F - (|a|^2 - 1)|", 1e-9);
  for (int t = 0; t < cfg.trials; ++t) {
    const BlochForm bf = bloch_decompose(density_from_pure(haar_random_pure(rng.next())));
    fb.observe((bf.f * bf.b - bf.a).norm());
    fta.observe((bf.f.transpose() * bf.a - bf.b).norm());
    len.observe(std::abs(bf.a.norm() - bf.b.norm()));
    det.observe(std::abs(det3(bf.f) - (dot(bf.a, bf.a) - 1.0)));
  }
  return finish("qstate", "pure_state_properties", {&fb, &fta, &len, &det});
}

PropertyResult product_unit_bloch(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 12);
  Residual a("||a| - 1|", 1e-9), b("||b| - 1|", 1e-9);
  for (int t = 0; t < cfg.trials; ++t) {
    const BlochForm bf = bloch_decompose(density_from_pure(random_product_pure(rng.next())));
    a.observe(std::abs(bf.a.norm() - 1.0));
    b.observe(std::abs(bf.b.norm() - 1.0));
  }
  return finish("qstate", "product_unit_bloch", {&a, &b});
}

PropertyResult partial_trace_consistency(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 13);
  Residual ra("Tr(rho_A Q) vs Tr(rho Q x 1)", 1e-10), rb("Tr(rho_B R) vs Tr(rho 1 x R)", 1e-10);
  const CMat2 one = CMat2::identity();
  for (int t = 0; t < cfg.trials; ++t) {
    const DensityMatrix rho = random_density(rng.next());
    const QubitOperator q = observable_from_bloch(random_ball_vector(rng));
    const QubitOperator r = observable_from_bloch(random_ball_vector(rng));
    ra.observe(std::abs(trace_of_product(partial_trace_B(rho), q) -
                        trace_of_product(rho.matrix(), joint_operator(q, one))));
    rb.observe(std::abs(trace_of_product(partial_trace_A(rho), r) -
                        trace_of_product(rho.matrix(), joint_operator(one, r))));
  }
  return finish("qstate", "partial_trace_consistency", {&ra, &rb});
}

// correlation

PropertyResult covariance_paths_agree(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 20);
  Residual r("|direct - via C|", 1e-10);
  for (int t = 0; t < cfg.trials; ++t) {
    const DensityMatrix rho = t % 3 == 0 ? density_from_pure(haar_random_pure(rng.next()))
                                         : random_density(rng.next());
    const ObservablePair pair(random_ball_vector(rng), random_ball_vector(rng));
    r.observe(std::abs(covariance_direct(rho, pair) -
                       covariance_via_C(correlation_matrix(rho), pair)));
  }
  return finish("correlation", "covariance_paths_agree", {&r});
}

PropertyResult covariance_bilinear(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 21);
  Residual rx("linearity in x", 1e-12), ry("linearity in y", 1e-12);
  for (int t = 0; t < cfg.trials; ++t) {
    const CorrMatrix cm = correlation_matrix(random_density(rng.next()));
    const Vec3 u1 = random_ball_vector(rng), u2 = random_ball_vector(rng);
    const Vec3 y = random_ball_vector(rng);
    const double al = 0.5 * rng.uniform(), be = 0.5 * rng.uniform();
    const Vec3 mix = al * u1 + be * u2;
    rx.observe(std::abs(covariance_via_C(cm, {mix, y}) -
                        (al * covariance_via_C(cm, {u1, y}) + be * covariance_via_C(cm, {u2, y}))));
    ry.observe(std::abs(covariance_via_C(cm, {y, mix}) -
                        (al * covariance_via_C(cm, {y, u1}) + be * covariance_via_C(cm, {y, u2}))));
  }
  return finish("correlation", "covariance_bilinear", {&rx, &ry});
}

PropertyResult pure_rank_dichotomy(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 22);
  long bad = 0;
  for (int t = 0; t < 2 * cfg.trials; ++t) {
    const PureState psi = t % 2 ? haar_random_pure(rng.next()) : random_product_pure(rng.next());
    const int rank = correlation_matrix(density_from_pure(psi)).rank();
    const bool separable = schmidt_rank(psi) == 1;
    if (!((rank == 0 && separable) || (rank == 3 && !separable))) ++bad;
  }
  return counted("correlation", "pure_rank_dichotomy", bad, 2L * cfg.trials,
                 "pure states outside {rank 0 & Schmidt 1, rank 3 & Schmidt 2}");
}

PropertyResult determinant_identity(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 23);
  Residual r("|det C + (|b|^2 - 1)^2|", 1e-9);
  for (int t = 0; t < cfg.trials; ++t) {
    const BlochForm bf = bloch_decompose(density_from_pure(haar_random_pure(rng.next())));
    const double nb = dot(bf.b, bf.b) - 1.0;
    r.observe(std::abs(correlation_matrix(bf).det() + nb * nb));
  }
  return finish("correlation", "determinant_identity", {&r});
}

// detect

PropertyResult oracle_agreement(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 30);
  long bad = 0;
  for (int t = 0; t < 2 * cfg.trials; ++t) {
    const PureState psi = t % 2 ? haar_random_pure(rng.next()) : random_product_pure(rng.next());
    if (classify_pure_by_rank(psi).label != classify_by_schmidt(psi).label) ++bad;
  }
  return counted("detect", "oracle_agreement", bad, 2L * cfg.trials,
                 "rank-classifier verdicts disagreeing with the Schmidt oracle");
}

PropertyResult protocol_soundness(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 31);
  long bad = 0;
  for (int t = 0; t < 2 * cfg.trials; ++t) {
    const PureState psi = t % 2 ? haar_random_pure(rng.next()) : random_product_pure(rng.next());
    const DensityMatrix rho = density_from_pure(psi);
    const Vec3 y = random_unit_vector(rng);
    const auto xs = random_independent_triple(rng);
    const auto res = binary_protocol(rho, y, xs, exact_oracle(rho));
    if (res.verdict.label != classify_pure_by_rank(psi).label) ++bad;
  }
  return counted("detect", "protocol_soundness", bad, 2L * cfg.trials,
                 "protocol verdicts disagreeing with the rank classifier");
}

PropertyResult minimality_witness(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 32);
  Residual r("|c| on the two complement probes", kZeroCorrelationTol);
  for (int t = 0; t < cfg.trials; ++t) {
    const DensityMatrix rho = density_from_pure(haar_random_pure(rng.next()));
    const Vec3 y = random_unit_vector(rng);
    const auto [x1, x2] = orthogonal_complement_basis(correlation_matrix(rho).matrix() * y);
    r.observe(std::max(std::abs(covariance_direct(rho, {x1, y})),
                       std::abs(covariance_direct(rho, {x2, y}))));
  }
  return finish("detect", "minimality_witness", {&r});
}

PropertyResult zero_pair_universality(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 33);
  Residual r("|c| at the constructed pair", kZeroCorrelationTol);
  for (int t = 0; t < cfg.trials; ++t) {
    const DensityMatrix rho = random_density(rng.next());
    Vec3 y = random_ball_vector(rng);
    if (y.norm() == 0.0) y = kDefaultProbeY;
    r.observe(std::abs(covariance_direct(rho, find_zero_correlation_pair(rho, y))));
  }
  for (double xi : {0.0, 0.2, 1.0 / 3.0, 0.5, 1.0}) {
    const DensityMatrix rho = werner(xi);
    for (int k = 0; k < 10; ++k)
      r.observe(std::abs(covariance_direct(rho, find_zero_correlation_pair(rho, random_unit_vector(rng)))));
  }
  return finish("detect", "zero_pair_universality", {&r});
}

PropertyResult werner_zero_sets(const PropertyConfig &) {
  const auto grid = probe_direction_grid();
  long bad = 0, total = 0;
  for (double xi : {0.1, 0.3, 0.4, 0.9}) {
    const DensityMatrix rho = werner(xi);
    if (ppt_is_separable(rho) != (xi < 1.0 / 3.0)) ++bad;
    for (const Vec3 &x : grid)
      for (const Vec3 &y : grid) {
        ++total;
        const bool zero = std::abs(covariance_direct(rho, {x, y})) < kZeroCorrelationTol;
        if (zero != (std::abs(dot(x, y)) < 1e-12)) ++bad;
      }
  }
  return counted("detect", "werner_zero_sets", bad, total,
                 "Werner pairs where zero correlation differs from x.y = 0 (or PPT mismatch)");
}

// shotsim (seed counts are fixed; they do not scale with trials)

PropertyResult shot_unbiased(const PropertyConfig &cfg) {
  const DensityMatrix rho = density_from_pure(bell_state(Bell::PsiMinus));
  const ObservablePair zz(kDefaultProbeY, kDefaultProbeY);
  constexpr int kSeeds = 200;
  double sum = 0.0, se_sum = 0.0;
  for (int i = 0; i < kSeeds; ++i) {
    const auto rec = sample_joint(rho, zz, {10000, cfg.seed + static_cast<std::uint64_t>(i), 5.0});
    sum += rec.covariance_estimate;
    se_sum += rec.standard_error;
  }
  const double mean = sum / kSeeds;
  const double bound = 3.0 * (se_sum / kSeeds) / std::sqrt(double(kSeeds));
  std::ostringstream s;
  s.precision(6);
  s << "mean " << mean << " vs -0.25, bound " << bound;
  return {"shotsim", "shot_unbiased", std::abs(mean + 0.25) <= bound, s.str()};
}

PropertyResult shot_se_scaling(const PropertyConfig &cfg) {
  const DensityMatrix rho = density_from_pure(bell_state(Bell::PsiMinus));
  const ObservablePair zz(kDefaultProbeY, kDefaultProbeY);
  std::array<double, 3> scaled{};
  const std::array<std::int64_t, 3> shots{1000, 10000, 100000};
  for (std::size_t i = 0; i < 3; ++i)
    scaled[i] = sample_joint(rho, zz, {shots[i], cfg.seed, 5.0}).standard_error *
                std::sqrt(static_cast<double>(shots[i]));
  const double worst = std::max(std::abs(scaled[1] / scaled[0] - 1.0),
                                std::abs(scaled[2] / scaled[0] - 1.0));
  std::ostringstream s;
  s.precision(4);
  s << "SE*sqrt(N) = " << scaled[0] << ", " << scaled[1] << ", " << scaled[2] << "; spread "
    << worst;
  return {"shotsim", "shot_se_scaling", worst < 0.2, s.str()};
}

PropertyResult shot_deterministic(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 42);
  long bad = 0;
  const int n = std::max(1, cfg.trials / 100);
  for (int t = 0; t < n; ++t) {
    const DensityMatrix rho = random_density(rng.next());
    const ObservablePair pair(random_unit_vector(rng), random_unit_vector(rng));
    const ShotConfig sc{1000, rng.next(), 3.0};
    const auto a = sample_joint(rho, pair, sc);
    const auto b = sample_joint(rho, pair, sc);
    if (a.counts != b.counts || a.covariance_estimate != b.covariance_estimate ||
        a.standard_error != b.standard_error || a.decision != b.decision)
      ++bad;
  }
  return counted("shotsim", "shot_deterministic", bad, n, "repeated runs that differed");
}

PropertyResult shot_false_positive(const PropertyConfig &cfg) {
  constexpr int kSeeds = 1000;
  const DensityMatrix mixed = werner(0.0);
  const DensityMatrix w02 = werner(0.2);
  const ObservablePair ortho(Vec3{1, 0, 0}, Vec3{0, 0, 1});
  const ObservablePair diag(Vec3{0, 0, 1}, Vec3{0, 0, 1});
  long hits = 0;
  for (int i = 0; i < kSeeds; ++i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    hits += sample_joint(mixed, diag, {10000, seed, 3.0}).decision == ShotDecision::NonZero;
    hits += sample_joint(w02, ortho, {10000, seed, 3.0}).decision == ShotDecision::NonZero;
  }
  const double rate = static_cast<double>(hits) / (2.0 * kSeeds);
  std::ostringstream s;
  s << hits << "/" << 2 * kSeeds << " NonZero calls at z = 3 on zero-covariance inputs";
  return {"shotsim", "shot_false_positive", rate < 0.01, s.str()};
}

// states

PropertyResult generators_valid(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 50);
  long bad = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    try {
      const std::uint64_t s = rng.next();
      const int k = 1 + t % 4;
      (void)haar_random_pure(s);
      (void)random_product_pure(s);
      (void)random_pure_mixture(s, k);
      const DensityMatrix sep = random_separable_mixed(s, k);
      if (!ppt_is_separable(sep)) ++bad;
      if (k == 1 && !sep.is_pure()) ++bad;
    } catch (const Error &) {
      ++bad;
    }
  }
  return counted("states", "generators_valid", bad, cfg.trials,
                 "seeds producing an invalid state, a non-PPT separable mixture or a mixed k = 1 product");
}

PropertyResult werner_bloch(const PropertyConfig &) {
  Residual ab("|a|, |b|", 1e-12), f("|F + xi I|", 1e-12);
  for (int i = 0; i <= 100; ++i) {
    const double xi = i / 100.0;
    const BlochForm bf = bloch_decompose(werner(xi));
    ab.observe(std::max(bf.a.norm(), bf.b.norm()));
    f.observe(max_abs_diff(bf.f, -xi * Mat3::identity()));
  }
  return finish("states", "werner_bloch", {&ab, &f});
}

PropertyResult generators_deterministic(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 52);
  long bad = 0;
  const int n = std::max(1, cfg.trials / 10);
  for (int t = 0; t < n; ++t) {
    const std::uint64_t s = rng.next();
    if (haar_random_pure(s).amplitudes() != haar_random_pure(s).amplitudes()) ++bad;
    if (random_product_pure(s).amplitudes() != random_product_pure(s).amplitudes()) ++bad;
    if (random_separable_mixed(s, 3).matrix() != random_separable_mixed(s, 3).matrix()) ++bad;
  }
  return counted("states", "generators_deterministic", bad, n, "seeds with differing output");
}

// cli

PropertyResult analyze_round_trip(const PropertyConfig &cfg) {
  auto rng = suite_rng(cfg, 60);
  Residual r("report drift after re-ingest", 1e-12);
  const int n = std::max(1, cfg.trials / 100);
  for (int t = 0; t < n; ++t) {
    const StateSpec spec{"round-trip", random_density(rng.next())};
    const RunReport first = analyze(spec);
    const auto doc = to_json(first);
    const RunReport second = analyze(parse_state_spec(doc["input"].dump()));
    r.observe(std::max({max_abs_diff(first.c.matrix(), second.c.matrix()),
                        max_abs_diff(first.bloch.a, second.bloch.a),
                        max_abs_diff(first.bloch.b, second.bloch.b),
                        max_abs_diff(first.bloch.f, second.bloch.f)}));
    if (first.c.rank() != second.c.rank()) r.observe(1.0);
  }
  return finish("cli", "analyze_round_trip", {&r});
}

}  // namespace

CMat4 random_hermitian(SplitMix64 &rng) {
  CMat4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    m(r, r) = rng.normal();
    for (std::size_t c = r + 1; c < 4; ++c) {
      m(r, c) = Complex(rng.normal(), rng.normal());
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

Mat3 random_mat3(SplitMix64 &rng) {
  Mat3 m;
  for (auto &x : m.e) x = rng.normal();
  return m;
}

DensityMatrix random_density(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int k = 1 + static_cast<int>(rng.next() % 4);
  return rng.next() % 2 ? random_separable_mixed(rng.next(), k) : random_pure_mixture(rng.next(), k);
}

std::array<Vec3, 3> random_independent_triple(SplitMix64 &rng) {
  for (;;) {
    std::array<Vec3, 3> xs{random_unit_vector(rng), random_unit_vector(rng),
                           random_unit_vector(rng)};
    if (gram_determinant(xs) > 1e-3) return xs;
  }
}

std::vector<Vec3> probe_direction_grid() {
  const double h = 1.0 / std::sqrt(2.0);
  const double t = 1.0 / std::sqrt(3.0);
  return {{1, 0, 0},  {0, 1, 0},   {0, 0, 1},   {h, h, 0},   {h, -h, 0},
          {0, h, h},  {h, 0, -h},  {t, t, t},   {t, -t, t}, {0.6, 0.8, 0}};
}

const std::vector<PropertySuite> &property_suites() {
  static const std::vector<PropertySuite> suites{
      {"linalg", "eigen_completeness", eigen_completeness},
      {"linalg", "sv_transpose", sv_transpose},
      {"linalg", "det_vs_singular_values", det_vs_singular_values},
      {"linalg", "rank_monotone", rank_monotone},
      {"qstate", "bloch_round_trip", bloch_round_trip},
      {"qstate", "pure_state_properties", pure_state_properties},
      {"qstate", "product_unit_bloch", product_unit_bloch},
      {"qstate", "partial_trace_consistency", partial_trace_consistency},
      {"correlation", "covariance_paths_agree", covariance_paths_agree},
      {"correlation", "covariance_bilinear", covariance_bilinear},
      {"correlation", "pure_rank_dichotomy", pure_rank_dichotomy},
      {"correlation", "determinant_identity", determinant_identity},
      {"detect", "oracle_agreement", oracle_agreement},
      {"detect", "protocol_soundness", protocol_soundness},
      {"detect", "minimality_witness", minimality_witness},
      {"detect", "zero_pair_universality", zero_pair_universality},
      {"detect", "werner_zero_sets", werner_zero_sets},
      {"shotsim", "shot_unbiased", shot_unbiased},
      {"shotsim", "shot_se_scaling", shot_se_scaling},
      {"shotsim", "shot_deterministic", shot_deterministic},
      {"shotsim", "shot_false_positive", shot_false_positive},
      {"states", "generators_valid", generators_valid},
      {"states", "werner_bloch", werner_bloch},
      {"states", "generators_deterministic", generators_deterministic},
      {"cli", "analyze_round_trip", analyze_round_trip},
  };
  return suites;
}

std::vector<PropertyResult> run_property_suites(const PropertyConfig &cfg) {
  if (cfg.trials < 100) throw Error(ErrorCode::InvalidArgument, "trial budget must be at least 100");
  std::vector<PropertyResult> out;
  for (const auto &suite : property_suites()) {
    try {
      out.push_back(suite.run(cfg));
    } catch (const std::exception &e) {
      out.push_back({suite.module, suite.name, false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

}  // namespace bincorr
