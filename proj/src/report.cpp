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

#include "bincorr/report.hpp"

#include <iomanip>
#include <ostream>

namespace bincorr {

using nlohmann::json;

namespace {

void print_vec(std::ostream &os, const Vec3 &v) {
  os << "(" << std::setw(10) << v[0] << ", " << std::setw(10) << v[1] << ", " << std::setw(10)
     << v[2] << ")";
}

void print_mat(std::ostream &os, const Mat3 &m, const char *indent) {
  for (std::size_t r = 0; r < 3; ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < 3; ++c) os << (c ? ", " : "") << std::setw(10) << m(r, c);
    os << "]\n";
  }
}

std::string_view to_string(ShotDecision d) { return d == ShotDecision::Zero ? "Zero" : "NonZero"; }

}  // namespace

RunReport analyze(const StateSpec &spec) {
  const DensityMatrix rho = spec.density();
  const BlochForm bf = bloch_decompose(rho);
  RunReport report{spec, bf, correlation_matrix(bf), {}, std::nullopt, std::nullopt, {}};
  if (const auto *psi = std::get_if<PureState>(&spec.state)) {
    report.verdicts.push_back(classify_by_rank(report.c));
    report.verdicts.push_back(classify_by_schmidt(*psi));
  }
  report.verdicts.push_back(classify_by_ppt(rho));
  return report;
}

RunReport detect(const StateSpec &spec, const DetectOptions &opts) {
  RunReport report = analyze(spec);
  const DensityMatrix rho = spec.density();
  if (opts.shots) {
    report.shot_config = *opts.shots;
    report.protocol = statistical_binary_protocol(rho, opts.y, opts.xs, *opts.shots,
                                                  opts.assume_pure, &report.shot_records);
  } else {
    report.protocol = binary_protocol(rho, opts.y, opts.xs, exact_oracle(rho), opts.assume_pure);
  }
  return report;
}

int exit_code_for(const Verdict &v) {
  switch (v.label) {
    case VerdictLabel::Separable: return 0;
    case VerdictLabel::Entangled: return 1;
    case VerdictLabel::Indeterminate: return 2;
  }
  return 2;
}

json to_json(const Vec3 &v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const Mat3 &m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 3; ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

json to_json(const Verdict &v) {
  return {{"label", to_string(v.label)}, {"basis", to_string(v.basis)}, {"detail", v.detail}};
}

json to_json(const RunReport &report) {
  json doc;
  doc["input"] = to_json(report.input);
  doc["bloch"] = {{"a", to_json(report.bloch.a)},
                  {"b", to_json(report.bloch.b)},
                  {"F", to_json(report.bloch.f)}};
  const auto &sv = report.c.singular_values();
  doc["correlation"] = {{"C", to_json(report.c.matrix())},
                        {"singular_values", json::array({sv[0], sv[1], sv[2]})},
                        {"rank", report.c.rank()},
                        {"det", report.c.det()}};
  json verdicts = json::array();
  for (const auto &v : report.verdicts) verdicts.push_back(to_json(v));
  doc["verdicts"] = std::move(verdicts);

  if (report.protocol) {
    const auto &trace = report.protocol->trace;
    json probes = json::array();
    for (const auto &p : trace.probes)
      probes.push_back({{"x", to_json(p.x)}, {"covariance", p.covariance}, {"is_zero", p.is_zero}});
    doc["protocol"] = {{"verdict", to_json(report.protocol->verdict)},
                       {"y", to_json(trace.y)},
                       {"probes", std::move(probes)},
                       {"measurements_used", trace.measurements_used}};
  }
  if (report.shot_config) {
    json records = json::array();
    for (const auto &r : report.shot_records)
      records.push_back({{"estimate_xy", r.estimate_xy},
                         {"estimate_x", r.estimate_x},
                         {"estimate_y", r.estimate_y},
                         {"covariance_estimate", r.covariance_estimate},
                         {"standard_error", r.standard_error},
                         {"decision", to_string(r.decision)},
                         {"shots_used", r.shots_used}});
    doc["shots"] = {{"shots", report.shot_config->shots},
                    {"seed", report.shot_config->seed},
                    {"z_threshold", report.shot_config->z_threshold},
                    {"records", std::move(records)}};
  }
  return doc;
}

void print_report(std::ostream &os, const RunReport &report) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::fixed << std::setprecision(6);

  os << "state: " << (report.input.label ? *report.input.label : std::string("(unlabelled)"))
     << " [" << (report.input.is_pure_kind() ? "pure" : "mixed") << "]\n";
  os << "a = ";
  print_vec(os, report.bloch.a);
  os << "\nb = ";
  print_vec(os, report.bloch.b);
  os << "\nF =\n";
  print_mat(os, report.bloch.f, "  ");
  os << "C = F - a b^T =\n";
  print_mat(os, report.c.matrix(), "  ");
  const auto &sv = report.c.singular_values();
  os << "singular values: " << sv[0] << ", " << sv[1] << ", " << sv[2] << "\n";
  os << "rank(C) = " << report.c.rank() << "   det(C) = " << report.c.det() << "\n";

  os << "verdicts:\n";
  for (const auto &v : report.verdicts)
    os << "  " << std::left << std::setw(15) << to_string(v.basis) << std::setw(14)
       << to_string(v.label) << std::right << v.detail << "\n";

  if (report.protocol) {
    const auto &trace = report.protocol->trace;
    os << "protocol: y = ";
    print_vec(os, trace.y);
    os << "\n";
    for (std::size_t i = 0; i < trace.probes.size(); ++i) {
      const auto &p = trace.probes[i];
      os << "  probe " << i + 1 << "  x = ";
      print_vec(os, p.x);
      os << "  c = " << std::setw(10) << p.covariance << "  " << (p.is_zero ? "zero" : "non-zero");
      if (i < report.shot_records.size())
        os << "  (SE " << report.shot_records[i].standard_error << ")";
      os << "\n";
    }
    os << "  measurements used: " << trace.measurements_used << "\n";
    os << "  verdict: " << to_string(report.protocol->verdict.label) << " ("
       << report.protocol->verdict.detail << ")\n";
  }

  os.flags(flags);
  os.precision(prec);
}

}  // namespace bincorr
