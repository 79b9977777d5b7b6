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

// Cartan data of quivers, type recognition, folding by diagram
// automorphisms, and Chevalley-Serre checks in defining representations.
//
// Convention: c(i, j) = alpha_i(h_j). For simply-laced matrices this is the
// usual Cartan matrix; for folded ones it is the transpose of the Bourbaki
// matrix, so rows are simple roots in fundamental-weight coordinates and
// c(i, j) = -2 means alpha_i is the long root of that bond.
#ifndef QFOLD_LIE_FOLD_H_
#define QFOLD_LIE_FOLD_H_

#include <optional>
#include <string>
#include <vector>

#include "qfold/matrix.h"
#include "qfold/quiver.h"

namespace qfold {

class CartanMatrix {
 public:
  CartanMatrix() = default;
  // Throws Error(kDimensionMismatch) when the invariants fail.
  explicit CartanMatrix(std::vector<std::vector<int>> entries,
                        std::vector<std::string> labels = {});

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }

  CartanMatrix Transpose() const;
  RationalMatrix ToRational() const;
  bool IsSymmetric() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<std::vector<int>> entries_;
  std::vector<std::string> labels_;
};

enum class Family { kA, kB, kC, kD, kE, kF, kG, kAffineA, kAffineD, kOther };

struct TypeLabel {
  Family family = Family::kOther;
  int rank = 0;
  std::string ToString() const;  // "A5", "C2", "affine-D4", "other"
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

// Equal up to the low-rank coincidences A1 = B1 = C1, B2 = C2, A3 = D3.
bool EquivalentTypes(const TypeLabel& a, const TypeLabel& b);

// 2 Id - adjacency. Throws Error(kSelfLoop).
CartanMatrix CartanFromQuiver(const Quiver& q);

// Positive integers d with c(i,j) d_j = c(j,i) d_i, smallest per component.
std::optional<std::vector<int>> Symmetrizer(const CartanMatrix& c);

bool IsFiniteType(const CartanMatrix& c);
TypeLabel ClassifyCartan(const CartanMatrix& c);

struct FoldedAlgebraData {
  CartanMatrix base;
  std::vector<std::vector<int>> orbits;  // ordered by minimum
  CartanMatrix folded;
};

// folded([i], [j]) = sum_{k in [j]} c(i0, k). Throws kNotAdmissible and
// kRepresentativeDependence.
FoldedAlgebraData FoldCartan(const CartanMatrix& c, const std::vector<int>& vertex_perm);

struct Generators {
  std::vector<RationalMatrix> e, f, h;
};

enum class DefiningFamily { kA, kD };

// Chevalley generators of sl_{n+1} (A) or so_{2n} (D) in the defining
// representation, summed over the orbits of `vertex_perm` (a permutation of
// 0..rank-1 in the families:: labeling). h = [e, f].
Generators FoldedGenerators(int rank, DefiningFamily family, const std::vector<int>& vertex_perm);

struct SerreResult {
  bool ok = true;
  std::string violation;  // first failed relation
};

// Checks [h_i, h_j] = 0, [h_i, e_j] = c(j,i) e_j, [h_i, f_j] = -c(j,i) f_j,
// [e_i, f_j] = delta_ij h_i, ad(e_i)^{1-c(j,i)} e_j = 0, ad(f_i)^{1-c(j,i)} f_j = 0.
// Throws Error(kDimensionMismatch) on mismatched index sets.
SerreResult SerreCheck(const CartanMatrix& c, const Generators& g);

}  // namespace qfold

#endif  // QFOLD_LIE_FOLD_H_
