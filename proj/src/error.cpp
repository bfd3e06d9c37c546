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

#include "bincorr/error.hpp"

namespace bincorr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::BlochOutOfBall: return "BlochOutOfBall";
    case ErrorCode::RankContradiction: return "RankContradiction";
    case ErrorCode::DependentProbes: return "DependentProbes";
    case ErrorCode::NonUnitBloch: return "NonUnitBloch";
    case ErrorCode::XiOutOfRange: return "XiOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace bincorr
