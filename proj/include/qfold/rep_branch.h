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

// Characters of finite-dimensional irreducible modules and branching to a
// folded subalgebra. Weights are integer vectors in fundamental-weight
// coordinates; the simple root alpha_i is row i of the Cartan matrix.

#ifndef QFOLD_REP_BRANCH_H_
#define QFOLD_REP_BRANCH_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qfold/lie_fold.h"
#include "qfold/split_quotient.h"

namespace qfold {

using Weight = std::vector<int>;

inline constexpr int64_t kDefaultDimensionCap = 100000;

struct RootSystem {
  CartanMatrix cartan;
  std::vector<int> symmetrizer;
  // Simple-root coordinates, ordered by height then lexicographically.
  std::vector<std::vector<int>> positive;
};

struct Character {
  std::map<Weight, int64_t> multiplicity;
  int64_t Dimension() const;
  int64_t operator[](const Weight& w) const;
};

// Throws Error(kNotFiniteType).
RootSystem PositiveRoots(const CartanMatrix& c);

bool IsDominant(const Weight& w);
// s_i(w) = w - w_i alpha_i.
Weight Reflect(const CartanMatrix& c, const Weight& w, int i);
Weight DominantConjugate(const CartanMatrix& c, Weight w);

// Errors: kNotDominant, kNotFiniteType, kDimensionCapExceeded, kIndexMismatch.
int64_t WeylDimension(const CartanMatrix& c, const Weight& lambda,
                      int64_t cap = kDefaultDimensionCap);
Character FreudenthalCharacter(const CartanMatrix& c, const Weight& lambda,
                               int64_t cap = kDefaultDimensionCap);

// Coordinate at orbit [i] is the sum of lambda_k over k in [i].
Weight RestrictWeight(const Weight& lambda, const FoldedAlgebraData& fold);

struct BranchTerm {
  Weight weight;
  int64_t multiplicity = 0;
  friend bool operator==(const BranchTerm&, const BranchTerm&) = default;
};

// kAny lifts the orbit-constancy requirement; the restricted character is
// still a character of the folded algebra.
enum class WeightPolicy { kInvariantOnly, kAny };

// Errors: kNotInvariantWeight, kStrippingFailure, plus those of the
// character computations on either side.
std::vector<BranchTerm> Branch(const CartanMatrix& c, const Weight& lambda,
                               const FoldedAlgebraData& fold,
                               int64_t cap = kDefaultDimensionCap,
                               WeightPolicy policy = WeightPolicy::kInvariantOnly);

Weight HighestWeightFromFraming(const DimensionVector& w);

}  // namespace qfold

#endif  // QFOLD_REP_BRANCH_H_
