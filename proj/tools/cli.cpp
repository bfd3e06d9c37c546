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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "bincorr/error.hpp"
#include "bincorr/properties.hpp"
#include "bincorr/report.hpp"

namespace bincorr::cli {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
  return v;
}

struct AnalyzeArgs {
  std::string file;
  bool json = false;
};

struct DetectArgs {
  std::string file;
  bool exact = false;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  double z = 5.0;
  std::string y;
  std::string xs;
  bool assume_pure = false;
  bool json = false;
};

struct SweepArgs {
  double from = 0.0;
  double to = 1.0;
  int steps = 11;
  std::string pair;
  bool json = false;
};

struct GenArgs {
  std::string kind;
  std::optional<double> xi;
  std::uint64_t seed = 0;
  int components = 3;
  std::string out;
};

struct VerifyArgs {
  int trials = 10000;
  std::uint64_t seed = 1;
};

int cmd_analyze(const AnalyzeArgs &a, std::ostream &out) {
  const RunReport report = analyze(read_state_file(a.file));
  if (a.json)
    out << to_json(report).dump(2) << "\n";
  else
    print_report(out, report);
  return 0;
}

int cmd_detect(const DetectArgs &a, std::ostream &out) {
  DetectOptions opts;
  if (!a.y.empty()) opts.y = parse_vec3(a.y);
  if (!a.xs.empty()) opts.xs = parse_vec3_triple(a.xs);
  opts.assume_pure = a.assume_pure;
  if (a.shots > 0) opts.shots = ShotConfig{a.shots, a.seed, a.z};

  const RunReport report = detect(read_state_file(a.file), opts);
  if (a.json)
    out << to_json(report).dump(2) << "\n";
  else
    print_report(out, report);
  return exit_code_for(report.protocol->verdict);
}

int cmd_sweep(const SweepArgs &a, std::ostream &out) {
  Vec3 x = kDefaultProbeY, y = kDefaultProbeY;
  if (!a.pair.empty()) {
    const auto parts = split(a.pair, '|');
    if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--pair expects 'x1,x2,x3|y1,y2,y3'");
    x = parse_vec3(parts[0]);
    y = parse_vec3(parts[1]);
  }
  if (a.steps < 1) throw Error(ErrorCode::InvalidArgument, "--steps must be at least 1");
  const ObservablePair pair(x, y);

  std::vector<WernerReport> rows;
  for (int i = 0; i < a.steps; ++i) {
    const double xi = a.steps == 1 ? a.from : a.from + (a.to - a.from) * i / (a.steps - 1);
    rows.push_back(werner_report(xi, pair));
  }

  if (a.json) {
    json doc = {{"x", to_json(x)}, {"y", to_json(y)}, {"rows", json::array()}};
    for (const auto &r : rows)
      doc["rows"].push_back({{"xi", r.xi},
                             {"covariance", r.covariance},
                             {"reference", r.reference},
                             {"ppt_separable", r.ppt_separable},
                             {"C_diagonal", to_json(Vec3{r.c_matrix.matrix()(0, 0),
                                                         r.c_matrix.matrix()(1, 1),
                                                         r.c_matrix.matrix()(2, 2)})}});
    out << doc.dump(2) << "\n";
    return 0;
  }

  const auto flags = out.flags();
  out << std::fixed << std::setprecision(6);
  out << std::setw(10) << "xi" << std::setw(14) << "covariance" << std::setw(14) << "-xi/4 x.y"
      << std::setw(12) << "PPT" << "\n";
  for (const auto &r : rows)
    out << std::setw(10) << r.xi << std::setw(14) << r.covariance << std::setw(14) << r.reference
        << std::setw(12) << (r.ppt_separable ? "separable" : "entangled") << "\n";
  out.flags(flags);
  return 0;
}

int cmd_gen(const GenArgs &a, std::ostream &out) {
  StateSpec spec{a.kind, PureState({1.0, 0.0, 0.0, 0.0})};
  const std::string seeded = a.kind + " seed " + std::to_string(a.seed);
  if (a.kind == "bell-psim") spec.state = bell_state(Bell::PsiMinus);
  else if (a.kind == "bell-psip") spec.state = bell_state(Bell::PsiPlus);
  else if (a.kind == "bell-phim") spec.state = bell_state(Bell::PhiMinus);
  else if (a.kind == "bell-phip") spec.state = bell_state(Bell::PhiPlus);
  else if (a.kind == "chen") spec.state = chen_state();
  else if (a.kind == "werner") {
    if (!a.xi) throw Error(ErrorCode::ParseError, "--kind werner requires --xi");
    spec.state = werner(*a.xi);
    std::ostringstream label;
    label << "werner xi=" << *a.xi;
    spec.label = label.str();
  } else if (a.kind == "haar") {
    spec.state = haar_random_pure(a.seed);
    spec.label = seeded;
  } else if (a.kind == "product") {
    spec.state = random_product_pure(a.seed);
    spec.label = seeded;
  } else if (a.kind == "sep-mixed") {
    spec.state = random_separable_mixed(a.seed, a.components);
    spec.label = seeded;
  } else {
    throw Error(ErrorCode::ParseError, "unknown --kind '" + a.kind + "'");
  }
  write_state_file(a.out, spec);
  out << "wrote " << a.out << "\n";
  return 0;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  const auto results = run_property_suites({a.trials, a.seed});
  int failed = 0;
  for (const auto &r : results) {
    failed += !r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.module
        << std::setw(28) << r.name << std::right << r.detail << "\n";
  }
  out << results.size() - failed << "/" << results.size() << " property suites passed ("
      << a.trials << " trials, seed " << a.seed << ")\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

Vec3 parse_vec3(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3)
    throw Error(ErrorCode::ParseError, "expected three comma-separated components: '" +
                                           std::string(text) + "'");
  return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
}

std::array<Vec3, 3> parse_vec3_triple(std::string_view text) {
  const auto parts = split(text, ';');
  if (parts.size() != 3)
    throw Error(ErrorCode::ParseError, "expected three ';'-separated vectors: '" +
                                           std::string(text) + "'");
  return {parse_vec3(parts[0]), parse_vec3(parts[1]), parse_vec3(parts[2])};
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Binary correlation measurements and entanglement detection for two qubits",
               "bincorr"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto *analyze_cmd = app.add_subcommand("analyze", "Bloch form, correlation matrix and oracle verdicts");
  analyze_cmd->add_option("file", analyze_args.file, "State file (JSON)")->required();
  analyze_cmd->add_flag("--json", analyze_args.json, "Emit one JSON document");

  DetectArgs detect_args;
  auto *detect_cmd = app.add_subcommand(
      "detect", "Three-probe binary protocol; exit 0 separable, 1 entangled, 2 indeterminate");
  detect_cmd->add_option("file", detect_args.file, "State file (JSON)")->required();
  auto *exact_flag = detect_cmd->add_flag("--exact", detect_args.exact, "Exact correlations (default)");
  auto *shots_opt = detect_cmd->add_option("--shots", detect_args.shots, "Simulated shots per probe")
                        ->check(CLI::Range(std::int64_t{100}, std::int64_t{1} << 40));
  exact_flag->excludes(shots_opt);
  detect_cmd->add_option("--seed", detect_args.seed, "Seed of the first probe");
  detect_cmd->add_option("--z", detect_args.z, "Standard errors for a non-zero call")
      ->check(CLI::PositiveNumber);
  detect_cmd->add_option("--y", detect_args.y, "Fixed Bloch vector on B, 'y1,y2,y3'");
  detect_cmd->add_option("--xs", detect_args.xs, "Probe Bloch vectors on A, 'x;x;x'");
  detect_cmd->add_flag("--assume-pure", detect_args.assume_pure,
                       "Give a verdict even when the input is mixed");
  detect_cmd->add_flag("--json", detect_args.json, "Emit one JSON document");

  SweepArgs sweep_args;
  auto *sweep_cmd = app.add_subcommand("sweep-werner", "Covariance and PPT verdict across Werner states");
  sweep_cmd->add_option("--from", sweep_args.from, "First xi")->required();
  sweep_cmd->add_option("--to", sweep_args.to, "Last xi")->required();
  sweep_cmd->add_option("--steps", sweep_args.steps, "Number of rows")->required();
  sweep_cmd->add_option("--pair", sweep_args.pair, "Observables 'x1,x2,x3|y1,y2,y3' (default z|z)");
  sweep_cmd->add_flag("--json", sweep_args.json, "Emit one JSON document");

  GenArgs gen_args;
  auto *gen_cmd = app.add_subcommand("gen", "Write a state file");
  gen_cmd->add_option("--kind", gen_args.kind, "State family")
      ->required()
      ->check(CLI::IsMember({"bell-psim", "bell-psip", "bell-phim", "bell-phip", "chen", "werner",
                             "haar", "product", "sep-mixed"}));
  gen_cmd->add_option("--xi", gen_args.xi, "Werner parameter in [0, 1]");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed for random families");
  gen_cmd->add_option("--components", gen_args.components, "Terms in a sep-mixed state")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen_args.out, "Output path")->required();

  VerifyArgs verify_args;
  auto *verify_cmd = app.add_subcommand("verify", "Run every property suite");
  verify_cmd->add_option("--trials", verify_args.trials, "Trials per suite (>= 100)")
      ->check(CLI::Range(100, 100000000));
  verify_cmd->add_option("--seed", verify_args.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*detect_cmd) return cmd_detect(detect_args, out);
    if (*sweep_cmd) return cmd_sweep(sweep_args, out);
    if (*gen_cmd) return cmd_gen(gen_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::IoError;
    return usage ? kExitUsage : kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace bincorr::cli
