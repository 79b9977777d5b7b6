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

// Dimension bookkeeping for quiver varieties and the theta-fixed locus.

#ifndef QFOLD_DIM_CALC_H_
#define QFOLD_DIM_CALC_H_

#include <vector>

#include "qfold/lie_fold.h"
#include "qfold/scalar.h"
#include "qfold/split_quotient.h"

namespace qfold {

// 2 v.w - v.Cv. Throws kShapeMismatch.
long long DimQuiverVariety(const DimensionVector& v, const DimensionVector& w, const CartanMatrix& c);

struct SteinbergDimension {
  Rational value;
  bool integral = true;
};

// Half the sum of the two quiver-variety dimensions, exact.
SteinbergDimension DimSteinberg(const DimensionVector& v1, const DimensionVector& v2,
                                const DimensionVector& w, const CartanMatrix& c);

struct ComponentRecord {
  DimensionVector v_split, w_split;
  long long dim = 0;
  bool empty = false;  // formula negative
};

// One record per v' in FibersOfP(v), dimension computed on s(Q).
// Throws kNotOrbitConstant, kShapeMismatch.
std::vector<ComponentRecord> FixedComponents(const DimensionVector& v, const SplitData& sd,
                                             const DimensionVector& w_split);

}  // namespace qfold

#endif  // QFOLD_DIM_CALC_H_
