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

/**
 * @file properties.hpp
 * Randomised property suites for every module, run by `bincorr verify` and
 * by the unit tests. Each suite is a pure function of (trials, seed).
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bincorr/linalg.hpp"
#include "bincorr/qstate.hpp"
#include "bincorr/rng.hpp"

namespace bincorr {

struct PropertyConfig {
  int trials = 10000;
  std::uint64_t seed = 1;
};

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PropertySuite {
  std::string module;
  std::string name;
  std::function<PropertyResult(const PropertyConfig &)> run;
};

/// All suites, grouped by module in dependency order.
const std::vector<PropertySuite> &property_suites();

/// Runs every suite. Throws InvalidArgument for trials < 100.
std::vector<PropertyResult> run_property_suites(const PropertyConfig &cfg);

/// Ten unit vectors whose pairwise dot products include many exact zeros.
std::vector<Vec3> probe_direction_grid();

CMat4 random_hermitian(SplitMix64 &rng);
Mat3 random_mat3(SplitMix64 &rng);
/// Alternates random separable mixtures and Haar pure-state mixtures with
/// 1 to 4 components.
DensityMatrix random_density(std::uint64_t seed);
/// Three random unit vectors with Gram determinant above 1e-3.
std::array<Vec3, 3> random_independent_triple(SplitMix64 &rng);

}  // namespace bincorr
