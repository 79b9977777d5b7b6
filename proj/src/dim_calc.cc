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

#include "qfold/dim_calc.h"

#include "qfold/error.h"

namespace qfold {

long long DimQuiverVariety(const DimensionVector& v, const DimensionVector& w, const CartanMatrix& c) {
  if (v.size() != c.rank() || w.size() != c.rank()) {
    throw Error(ErrorCode::kShapeMismatch, "dimension vectors must match the Cartan matrix rank");
  }
  long long d = 0;
  for (int i = 0; i < c.rank(); ++i) {
    d += 2LL * v[i] * w[i];
    for (int j = 0; j < c.rank(); ++j) d -= 1LL * v[i] * c(i, j) * v[j];
  }
  return d;
}

SteinbergDimension DimSteinberg(const DimensionVector& v1, const DimensionVector& v2,
                                const DimensionVector& w, const CartanMatrix& c) {
  const long long sum = DimQuiverVariety(v1, w, c) + DimQuiverVariety(v2, w, c);
  SteinbergDimension out;
  out.value = MakeRational(sum, 2);
  out.integral = sum % 2 == 0;
  return out;
}

std::vector<ComponentRecord> FixedComponents(const DimensionVector& v, const SplitData& sd,
                                             const DimensionVector& w_split) {
  const CartanMatrix c = CartanFromQuiver(sd.split);
  if (w_split.size() != c.rank()) {
    throw Error(ErrorCode::kShapeMismatch, "w' must have one entry per split vertex");
  }
  std::vector<ComponentRecord> out;
  for (const DimensionVector& v_split : FibersOfP(v, sd)) {
    ComponentRecord r;
    r.v_split = v_split;
    r.w_split = w_split;
    r.dim = DimQuiverVariety(v_split, w_split, c);
    r.empty = r.dim < 0;
    out.push_back(r);
  }
  return out;
}

}  // namespace qfold
