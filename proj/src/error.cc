// Copyright 2026 The qfold Authors
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

#include "qfold/error.h"

namespace qfold {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidQuiver: return "InvalidQuiver";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kIncompatibleWithIncidence: return "IncompatibleWithIncidence";
    case ErrorCode::kAmbiguousEdgeMap: return "AmbiguousEdgeMap";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kIsoNotFound: return "IsoNotFound";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotOrbitConstant: return "NotOrbitConstant";
    case ErrorCode::kSigmaConstraintViolated: return "SigmaConstraintViolated";
    case ErrorCode::kNotDiagonalizable:
      return "NotDiagonalizableOverCyclotomicEigenvalues";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kRepresentativeDependence: return "RepresentativeDependence";
    case ErrorCode::kUnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotFiniteType: return "NotFiniteType";
    case ErrorCode::kNotDominant: return "NotDominant";
    case ErrorCode::kDimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::kIndexMismatch: return "IndexMismatch";
    case ErrorCode::kNotInvariantWeight: return "NotInvariantWeight";
    case ErrorCode::kStrippingFailure: return "StrippingFailure";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kRelationViolation: return "RelationViolation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotStable: return "NotStable";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotFiniteOrder: return "NotFiniteOrder";
    case ErrorCode::kNotAnEmbedding: return "NotAnEmbedding";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qfold
