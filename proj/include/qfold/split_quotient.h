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

// Quotient and split-quotient quivers of a quiver with an admissible
// diagram automorphism, and the dimension-vector projection between them.
#ifndef QFOLD_SPLIT_QUOTIENT_H_
#define QFOLD_SPLIT_QUOTIENT_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfold/matrix.h"
#include "qfold/quiver.h"

namespace qfold {

// Nonnegative integers indexed by the vertices of a fixed quiver.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<int> values);
  static DimensionVector Zero(int size) { return DimensionVector(std::vector<int>(size, 0)); }
  // Missing ids read as 0; unknown ids throw Error(kUnknownVertex).
  static DimensionVector FromMap(const Quiver& q, const std::vector<std::pair<std::string, int>>& m);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int v) const { return values_[v]; }
  int& operator[](int v) { return values_[v]; }
  const std::vector<int>& values() const { return values_; }
  int Total() const;

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::vector<int> values_;
};

// Vertex (orbit, j/e) of the split quiver. The phase is kept unreduced so
// (j, e) stays recoverable; Phase() gives the reduced fraction.
struct SplitVertex {
  int orbit = 0;
  int j = 1;
  int e = 1;
  Rational Phase() const { return MakeRational(j, e); }
};

// Split edge built from an edge orbit and a compatible pair of phases.
struct SplitEdge {
  int edge_orbit = 0;
  int j_src = 1;
  int j_tgt = 1;
};

struct SplitData {
  Quiver source;
  DiagramAutomorphism source_automorphism;
  OrbitData orbits;
  Quiver split;
  DiagramAutomorphism induced;  // a', satisfies a'^n = id with n = orbits.n
  std::vector<SplitVertex> labels;
  std::vector<SplitEdge> edge_labels;
  // orbit -> split vertex indices for j = 1..e_i
  std::vector<std::vector<int>> split_vertices_of_orbit;

  // Minimal vertex of the orbit; the lift used by SplitFraming.
  int Lift(int orbit) const { return orbits.vertex_orbits[orbit].front(); }
  int SplitVertexIndex(int orbit, int j) const { return split_vertices_of_orbit[orbit][j - 1]; }
};

// Vertices are orbits, edges are edge orbits. Throws kNotAdmissible.
Quiver QuotientQuiver(const Quiver& q, const DiagramAutomorphism& a);

// Split vertices (orbit, j/e_i), 1 <= j <= e_i. For every edge orbit with a
// representative h from orbit s to orbit t, one split edge (s, j1) -> (t, j2)
// is created per pair with j1 = j2 (mod e_h). `n_override` replaces the lcm
// used as the group order (needed when re-splitting with the induced a').
SplitData SplitQuiver(const Quiver& q, const DiagramAutomorphism& a,
                      std::optional<int> n_override = std::nullopt);

// Vertex bijection f with q2 adjacency(f(u), f(v)) = q1 adjacency(u, v),
// counting parallel edges in either direction. `accept`, when given, is
// asked to approve each complete candidate.
using Bijection = std::vector<int>;
std::optional<Bijection> GraphIsomorphic(
    const Quiver& q1, const Quiver& q2,
    const std::function<bool(const Bijection&)>& accept = nullptr);

struct InvolutionWitness {
  Quiver double_split;
  Bijection to_source;  // vertex of s(s(Q)) -> vertex of Q
  // The doubly induced automorphism matches a under the bijection on
  // vertices.
  bool automorphisms_match = false;
};

// Throws Error(kIsoNotFound) when s(s(Q)) is not isomorphic to Q.
InvolutionWitness SplitInvolutionCheck(const Quiver& q, const DiagramAutomorphism& a);

// p(v')_i = sum_j v'_(orbit(i), j). Throws kUnknownVertex on size mismatch.
DimensionVector ProjectDim(const DimensionVector& v_split, const SplitData& sd);

// All v' with p(v') = v, lexicographic in split-vertex order.
// Throws kNotOrbitConstant.
std::vector<DimensionVector> FibersOfP(const DimensionVector& v, const SplitData& sd);
// Closed form: product over orbits of C(v_i + e_i - 1, e_i - 1).
long long FiberCount(const DimensionVector& v, const SplitData& sd);

// sigma[i] : W_i -> W_a(i). Verifies (sigma_{a^{d-1} i} ... sigma_i)^{e_i} = id
// at every vertex and returns w'_(orbit, j) = dim of the zeta_{e_i}^j
// eigenspace of that composite at `lifts[orbit]` (default: Lift(orbit)).
DimensionVector SplitFraming(const DimensionVector& w, const std::vector<RationalMatrix>& sigma,
                             const SplitData& sd, const std::vector<int>& lifts = {});

// sigma_{a^{d-1} i} ... sigma_i at vertex i.
RationalMatrix OrbitComposite(const std::vector<RationalMatrix>& sigma,
                              const DiagramAutomorphism& a, const OrbitData& od, int vertex);

}  // namespace qfold

#endif  // QFOLD_SPLIT_QUOTIENT_H_
