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

#include <array>
#include <iosfwd>
#include <string_view>

#include "bincorr/linalg.hpp"

namespace bincorr::cli {

/// Exit codes above the detect verdict range (0, 1, 2).
inline constexpr int kExitUsage = 3;
inline constexpr int kExitInvalid = 4;

/// Entry point for the `bincorr` executable, with output streams injected
/// so the command surface can be driven from tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// "x,y,z"
Vec3 parse_vec3(std::string_view text);
/// "x,y,z;x,y,z;x,y,z"
std::array<Vec3, 3> parse_vec3_triple(std::string_view text);

}  // namespace bincorr::cli
