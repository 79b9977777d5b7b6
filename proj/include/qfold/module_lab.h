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

// Framed modules over the preprojective algebra of a doubled quiver, the
// automorphism theta they carry, and transition matrices.
//
// Conventions: I_i : W_i -> V_i, J_i : V_i -> W_i. B is indexed by doubled
// arrows (see DoubledQuiver); the relation at i is
//   sum_{s(h) = i} eps(h) B_{hbar} B_h + I_i J_i = 0,
// with eps dropped in unsigned mode. theta pushes data forward along a:
//   B'_{a(h)} = c(h) B_h,  J'_{a(i)} = sigma_i J_i,  I'_{a(i)} = I_i sigma_i^{-1},
// where c(h) = +-1 compensates for edges whose orientation a reverses (see
// ThetaContext). g in G_V acts by B_h -> g_t B_h g_s^{-1}, I -> g I, J -> J g^{-1}.

#ifndef QFOLD_MODULE_LAB_H_
#define QFOLD_MODULE_LAB_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qfold/eigen.h"
#include "qfold/error.h"
#include "qfold/matrix.h"
#include "qfold/quiver.h"
#include "qfold/split_quotient.h"

namespace qfold {

enum class RelationMode { kSigned, kUnsigned };

template <typename F>
using VertexMaps = std::vector<Matrix<F>>;

template <typename F>
struct FramedModule {
  DimensionVector v, w;
  std::vector<Matrix<F>> B;  // one per doubled arrow, v[t] x v[s]
  std::vector<Matrix<F>> I;  // v[i] x w[i]
  std::vector<Matrix<F>> J;  // w[i] x v[i]

  static FramedModule Zero(const DoubledQuiver& dq, const DimensionVector& v,
                           const DimensionVector& w);
  friend bool operator==(const FramedModule&, const FramedModule&) = default;
};

struct ThetaContext {
  DoubledQuiver dq;
  DiagramAutomorphism a;
  OrbitData od;
  RelationMode mode = RelationMode::kSigned;
  std::vector<int> arrow_image;  // MapArrow
  std::vector<int> arrow_twist;  // c(h) c(a(h)) in signed mode, else 1
  std::vector<int> inverse_vertex;
  // Edge orbits with no a-invariant orientation (only possible when a is
  // not admissible); on those theta is plain transport and the signed
  // relation need not be preserved.
  std::vector<int> unorientable_edge_orbits;
};

ThetaContext MakeThetaContext(const Quiver& q, const DiagramAutomorphism& a,
                              RelationMode mode = RelationMode::kSigned);

// --- shapes, relations, stability ------------------------------------------

template <typename F>
void CheckShapes(const DoubledQuiver& dq, const FramedModule<F>& m);

struct RelationResult {
  bool ok = true;
  int vertex = -1;  // first violating vertex
};

template <typename F>
RelationResult CheckRelations(const DoubledQuiver& dq, const FramedModule<F>& m,
                              RelationMode mode = RelationMode::kSigned);

// Largest B-invariant graded subspace inside ker J (column bases per vertex).
template <typename F>
VertexMaps<F> DestabilizingSubspace(const DoubledQuiver& dq, const FramedModule<F>& m);

// Throws kRelationViolation when the relations fail.
template <typename F>
bool IsStable(const DoubledQuiver& dq, const FramedModule<F>& m,
              RelationMode mode = RelationMode::kSigned);

// Enumerates every graded subspace; for prime fields only. Throws kTooLarge
// beyond dimension 4 at a vertex or more than `limit` graded subspaces.
template <uint32_t P>
bool BruteStability(const DoubledQuiver& dq, const FramedModule<PrimeField<P>>& m,
                    int64_t limit = 2000000);

// --- group action and theta ------------------------------------------------

template <typename F>
FramedModule<F> Act(const DoubledQuiver& dq, const VertexMaps<F>& g, const FramedModule<F>& m);

// (g*)_i = g_{a(i)}. Throws kIndexMismatch on shape problems.
template <typename F>
VertexMaps<F> Star(const VertexMaps<F>& g, const DiagramAutomorphism& a);

// theta(g M) = Transport(g) theta(M): Transport(g)_x = g_{a^{-1}(x)}.
// Equals Star(g) when a is an involution.
template <typename F>
VertexMaps<F> Transport(const ThetaContext& ctx, const VertexMaps<F>& g);

// sigma_{a^{d-1} i} ... sigma_i for sigma_i : W_i -> W_{a(i)}.
template <typename F>
Matrix<F> SigmaComposite(const ThetaContext& ctx, const VertexMaps<F>& sigma, int vertex);

// g_{a^{-(d-1)} i} ... g_{a^{-1} i} g_i: the operator theta^d(M) = C M
// induces on V_i. Equals g_i at a-fixed vertices.
template <typename F>
Matrix<F> TransitionComposite(const ThetaContext& ctx, const VertexMaps<F>& g, int vertex);

// Throws kSigmaConstraintViolated / kShapeMismatch.
template <typename F>
void CheckSigma(const ThetaContext& ctx, const DimensionVector& w, const VertexMaps<F>& sigma);

// Throws kNotOrbitConstant, kShapeMismatch.
void CheckOrbitConstant(const ThetaContext& ctx, const DimensionVector& v, const DimensionVector& w);

template <typename F>
FramedModule<F> ApplyTheta(const ThetaContext& ctx, const FramedModule<F>& m,
                           const VertexMaps<F>& sigma);

template <typename F>
bool VerifyTransition(const ThetaContext& ctx, const FramedModule<F>& m,
                      const VertexMaps<F>& sigma, const VertexMaps<F>& g);

// Solves theta(m) = g m. Throws kNotStable for unstable input. Returns
// nullopt when no invertible solution exists.
template <typename F>
std::optional<VertexMaps<F>> FindTransition(const ThetaContext& ctx, const FramedModule<F>& m,
                                            const VertexMaps<F>& sigma);

// --- random generation ---------------------------------------------------

using Rng = std::mt19937_64;

template <typename F>
Matrix<F> RandomMatrix(int rows, int cols, Rng& rng, int range = 2);
template <typename F>
Matrix<F> RandomInvertible(int n, Rng& rng);
// Random conjugate of a block sum of companion matrices of Phi_d, d | e.
template <typename F>
Matrix<F> RandomFiniteOrder(int n, int e, Rng& rng);
// Per-vertex maps whose orbit composites have order dividing e_i: the
// SigmaComposite products by default, the TransitionComposite products
// (taken along a^{-1}) with `transition`.
template <typename F>
VertexMaps<F> RandomTwist(const ThetaContext& ctx, const DimensionVector& dims, Rng& rng,
                          bool transition = false);
template <typename F>
VertexMaps<F> RandomGroupElement(const DimensionVector& dims, Rng& rng);
// Random B and J, then I solving the relation; sparsifies B until the
// relation is solvable.
template <typename F>
FramedModule<F> RandomRelationModule(const DoubledQuiver& dq, const DimensionVector& v,
                                     const DimensionVector& w, Rng& rng,
                                     RelationMode mode = RelationMode::kSigned);
// Arbitrary data, relations not imposed.
template <typename F>
FramedModule<F> RandomData(const DoubledQuiver& dq, const DimensionVector& v,
                           const DimensionVector& w, Rng& rng);

// --- rational laboratory ---------------------------------------------------

using RationalModule = FramedModule<Rational>;
using RationalMaps = VertexMaps<Rational>;

struct EigenProfile {
  std::vector<EigenPiece> pieces;  // eigenvalues zeta_e^j, j = 1..e
  int outside = 0;                 // size minus the sum of the pieces
};

// No finite-order assumption.
EigenProfile ComputeEigenProfile(const RationalMatrix& g, int e);

struct FixedVertexReport {
  int vertex = 0;
  int e = 0;
  EigenProfile profile;
};

struct ThetaWitness {
  RationalModule module;       // m1 + g theta(m1)
  RationalMaps sigma;          // sigma + sigma on the doubled framing
  RationalMaps witness;        // verified: theta(module) = witness module
  bool block_diagonal_verifies = false;  // whether diag(g*, g^-1) also works
  bool m1_check_skipped = false;         // m1 unstable: theta-stability unchecked
  std::vector<FixedVertexReport> fixed_vertices;
};

// Requires theta^2 = id and I = J = 0 on m1 (kPreconditionViolation
// otherwise). The two summands of theta(M) arrive exchanged, so the
// verified witness is [[0, g^-1], [g*, 0]] at each vertex.
ThetaWitness BuildThetaWitness(const ThetaContext& ctx, const RationalModule& m1,
                               const RationalMaps& g, const RationalMaps& sigma);

// Throws kShapeMismatch when the framings differ.
bool CheckFramedEmbedding(const DoubledQuiver& dq, const RationalMaps& xi,
                          const RationalModule& sub, const RationalModule& m);

// Codimension 1 at every vertex of the orbit of i and 0 elsewhere; with
// `at_most`, codimension <= 1 on the orbit, 0 elsewhere, not all zero.
// Throws kNotAnEmbedding.
bool HeckeProfile(const ThetaContext& ctx, const RationalMaps& xi, const RationalModule& sub,
                  const RationalModule& m, int vertex, bool at_most = false);

struct Theorem5Result {
  bool ok = true;
  int vertex = -1;
  int j = 0;  // eigenvalue zeta_e^j
  CyclotomicMatrix vector;
};

// Checks xi(eigenspace of C', lambda) inside eigenspace of C, lambda, for the
// transition composites C', C at every vertex. Throws kPreconditionViolation
// unless both modules are stable, both witnesses verify, and xi is a framed
// embedding.
Theorem5Result Theorem5Verify(const ThetaContext& ctx, const RationalMaps& xi,
                              const RationalModule& sub, const RationalMaps& g_sub,
                              const RationalModule& m, const RationalMaps& g,
                              const RationalMaps& sigma);

struct Theorem5Instance {
  RationalModule sub, m;
  RationalMaps xi, g_sub, g, sigma;
};

// A stable pair sub in m, both theta-stable, with their transitions; see
// the implementation for the recipe. Requires an admissible automorphism
// and orbit-constant dims with v_sub <= v.
Theorem5Instance GenerateTheorem5Instance(const ThetaContext& ctx, const DimensionVector& v_sub,
                                          const DimensionVector& v, const DimensionVector& w,
                                          Rng& rng);

}  // namespace qfold

#include "qfold/module_lab_impl.h"

#endif  // QFOLD_MODULE_LAB_H_
