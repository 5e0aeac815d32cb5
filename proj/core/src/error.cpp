// Copyright 2026 The Toric Moduli Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::IrrationalSlope: return "IrrationalSlope";
    case ErrorCode::NotDelzant: return "NotDelzant";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::ZeroSegment: return "ZeroSegment";
    case ErrorCode::ChopTooLarge: return "ChopTooLarge";
    case ErrorCode::ConvexityBroken: return "ConvexityBroken";
    case ErrorCode::SlideOutOfRange: return "SlideOutOfRange";
    case ErrorCode::IrrationalEdge: return "IrrationalEdge";
    case ErrorCode::DefectOne: return "DefectOne";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::ToleranceUnachievable: return "ToleranceUnachievable";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace toric
