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

#ifndef QFOLD_ERROR_H_
#define QFOLD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfold {

enum class ErrorCode {
  kInvalidQuiver,
  kNotAPermutation,
  kIncompatibleWithIncidence,
  kAmbiguousEdgeMap,
  kNotAdmissible,
  kIsoNotFound,
  kUnknownVertex,
  kNotOrbitConstant,
  kSigmaConstraintViolated,
  kNotDiagonalizable,
  kSelfLoop,
  kRepresentativeDependence,
  kUnsupportedFamily,
  kDimensionMismatch,
  kNotFiniteType,
  kNotDominant,
  kDimensionCapExceeded,
  kIndexMismatch,
  kNotInvariantWeight,
  kStrippingFailure,
  kShapeMismatch,
  kRelationViolation,
  kTooLarge,
  kNotStable,
  kNotInvertible,
  kNotFiniteOrder,
  kNotAnEmbedding,
  kPreconditionViolation,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure surfaced by the library. The code is stable and tested;
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qfold

#endif  // QFOLD_ERROR_H_
