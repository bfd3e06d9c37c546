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

#pragma once

// Run reports behind the `analyze` and `detect` commands, in both the
// machine-readable (JSON) and table forms.

#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "bincorr/correlation.hpp"
#include "bincorr/detect.hpp"
#include "bincorr/shotsim.hpp"
#include "bincorr/states.hpp"

namespace bincorr {

struct RunReport {
  StateSpec input;
  BlochForm bloch;
  CorrMatrix c;
  std::vector<Verdict> verdicts;  // rank classifier (pure inputs), Schmidt (pure), PPT
  std::optional<ProtocolResult> protocol;
  std::optional<ShotConfig> shot_config;
  std::vector<ShotRecord> shot_records;
};

RunReport analyze(const StateSpec &spec);

struct DetectOptions {
  Vec3 y = kDefaultProbeY;
  std::array<Vec3, 3> xs = kDefaultProbeXs;
  bool assume_pure = false;
  std::optional<ShotConfig> shots;  // exact oracle when empty
};

RunReport detect(const StateSpec &spec, const DetectOptions &opts);

/// 0 Separable, 1 Entangled, 2 Indeterminate.
int exit_code_for(const Verdict &v);

nlohmann::json to_json(const RunReport &report);
void print_report(std::ostream &os, const RunReport &report);

nlohmann::json to_json(const Vec3 &v);
nlohmann::json to_json(const Mat3 &m);
nlohmann::json to_json(const Verdict &v);

}  // namespace bincorr
