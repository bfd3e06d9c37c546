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
 * @file states.hpp
 * Named fixtures, seeded random ensembles and the JSON state-file format.
 *
 * State file:
 *
 *     {"kind": "pure", "label": "singlet",
 *      "amplitudes": [[re, im], [re, im], [re, im], [re, im]]}
 *     {"kind": "mixed", "matrix": [[[re, im], ...4], ...4]}   // row-major
 *
 * Amplitudes are in the order |a1 b1>, |a1 b2>, |a2 b1>, |a2 b2>.
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "bincorr/qstate.hpp"
#include "bincorr/rng.hpp"

namespace bincorr {

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

PureState bell_state(Bell which);

/// (|a1 b1> + |a1 b2> + |a2 b2>) / sqrt(3)
PureState chen_state();

/// (1 - xi)/4 1 + xi |Psi-><Psi-|. Throws XiOutOfRange unless 0 <= xi <= 1.
DensityMatrix werner(double xi);

/// sqrt(1 - eps^2) |a1 b1> + eps |a2 b2>; entangled for any 0 < eps < 1.
PureState near_product_pure(double eps);

Vec3 random_unit_vector(SplitMix64 &rng);
/// Uniform in the closed unit ball.
Vec3 random_ball_vector(SplitMix64 &rng);

/// Four i.i.d. standard complex Gaussians, normalised.
PureState haar_random_pure(std::uint64_t seed);
/// Product of two Haar-random qubit states.
PureState random_product_pure(std::uint64_t seed);
/// sum_i p_i rho_A^i x rho_B^i over k pure product terms (Bloch vectors
/// uniform on the sphere) with weights uniform on the simplex. Separable by
/// construction; k = 1 is a pure product state. Throws InvalidArgument for k < 1.
DensityMatrix random_separable_mixed(std::uint64_t seed, int k);
/// sum_i p_i |psi_i><psi_i| over k Haar-random pure states.
DensityMatrix random_pure_mixture(std::uint64_t seed, int k);

struct StateSpec {
  std::optional<std::string> label;
  std::variant<PureState, DensityMatrix> state;

  bool is_pure_kind() const { return std::holds_alternative<PureState>(state); }
  DensityMatrix density() const;
};

nlohmann::json to_json(const StateSpec &spec);
/// Throws ParseError for malformed documents and the qstate validation
/// errors for well-formed documents describing invalid states.
StateSpec state_spec_from_json(const nlohmann::json &doc);

StateSpec parse_state_spec(std::string_view text);
std::string dump_state_spec(const StateSpec &spec);

StateSpec read_state_file(const std::filesystem::path &path);
void write_state_file(const std::filesystem::path &path, const StateSpec &spec);

}  // namespace bincorr
