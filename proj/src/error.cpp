// Copyright 2026 The Authors.
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

#include "cgx/error.hpp"

namespace cgx {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMissingTop: return "MissingTop";
    case ErrorCode::kNotLoopless: return "NotLoopless";
    case ErrorCode::kNotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kNotNested: return "NotNested";
    case ErrorCode::kOverlappingGrounds: return "OverlappingGrounds";
    case ErrorCode::kGroundTooLarge: return "GroundTooLarge";
    case ErrorCode::kCodomainTooLarge: return "CodomainTooLarge";
    case ErrorCode::kLatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::kInterpolationMismatch: return "InterpolationMismatch";
    case ErrorCode::kNotAFlag: return "NotAFlag";
    case ErrorCode::kNotInCdSpan: return "NotInCdSpan";
    case ErrorCode::kNotGraded: return "NotGraded";
    case ErrorCode::kNotASublattice: return "NotASublattice";
    case ErrorCode::kNotMaximalChain: return "NotMaximalChain";
    case ErrorCode::kNotSupersolvable: return "NotSupersolvable";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kCyclicRelations: return "CyclicRelations";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
  }
  return "Unknown";
}

bool is_guard_error(ErrorCode code) {
  return code == ErrorCode::kGroundTooLarge ||
         code == ErrorCode::kCodomainTooLarge ||
         code == ErrorCode::kLatticeTooLarge;
}

}  // namespace cgx
