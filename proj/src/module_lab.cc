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

#include "qfold/module_lab.h"

#include <string>

namespace qfold {
namespace {

std::string Name(const ThetaContext& ctx, int v) { return ctx.dq.base.vertices()[v]; }

RationalMatrix BlockDiagonal(const RationalMatrix& a, const RationalMatrix& b) {
  return RationalMatrix::BlockDiagonal(a, b);
}

RationalModule DirectSum(const DoubledQuiver& dq, const RationalModule& x, const RationalModule& y) {
  std::vector<int> v, w;
  for (int i = 0; i < x.v.size(); ++i) {
    v.push_back(x.v[i] + y.v[i]);
    w.push_back(x.w[i] + y.w[i]);
  }
  RationalModule out = RationalModule::Zero(dq, DimensionVector(v), DimensionVector(w));
  for (size_t h = 0; h < out.B.size(); ++h) out.B[h] = BlockDiagonal(x.B[h], y.B[h]);
  for (int i = 0; i < x.v.size(); ++i) {
    out.I[i] = BlockDiagonal(x.I[i], y.I[i]);
    out.J[i] = BlockDiagonal(x.J[i], y.J[i]);
  }
  return out;
}

// Upper-left block of a module whose first sub_v[i] basis vectors span a
// submodule.
RationalModule Restrict(const DoubledQuiver& dq, const RationalModule& m, const DimensionVector& sub_v) {
  RationalModule out = RationalModule::Zero(dq, sub_v, m.w);
  for (int h = 0; h < dq.num_arrows(); ++h) {
    out.B[h] = m.B[h].Block(0, 0, sub_v[dq.arrows[h].tgt], sub_v[dq.arrows[h].src]);
  }
  for (int i = 0; i < sub_v.size(); ++i) {
    out.I[i] = m.I[i].Block(0, 0, sub_v[i], m.w[i]);
    out.J[i] = m.J[i].Block(0, 0, m.w[i], sub_v[i]);
  }
  return out;
}

// Average of T^k(m), k < n, for T = g^{-1} theta.
RationalModule AverageFixed(const ThetaContext& ctx, const RationalModule& m, const RationalMaps& g_inv,
                            const RationalMaps& sigma) {
  RationalModule sum = m, current = m;
  for (int k = 1; k < ctx.od.n; ++k) {
    current = Act(ctx.dq, g_inv, ApplyTheta(ctx, current, sigma));
    for (size_t h = 0; h < sum.B.size(); ++h) sum.B[h] += current.B[h];
    for (size_t i = 0; i < sum.I.size(); ++i) {
      sum.I[i] += current.I[i];
      sum.J[i] += current.J[i];
    }
  }
  const Rational scale = MakeRational(1, ctx.od.n);
  for (auto& b : sum.B) b *= scale;
  for (auto& x : sum.I) x *= scale;
  for (auto& x : sum.J) x *= scale;
  return sum;
}

}  // namespace

ThetaContext MakeThetaContext(const Quiver& q, const DiagramAutomorphism& a, RelationMode mode) {
  ThetaContext ctx;
  ctx.dq = BuildDoubled(q);
  ctx.a = a;
  ctx.od = ComputeOrbitData(q, a);
  ctx.mode = mode;
  const int n = q.num_vertices();
  ctx.inverse_vertex.assign(n, 0);
  for (int i = 0; i < n; ++i) ctx.inverse_vertex[a.vertex(i)] = i;
  for (int h = 0; h < ctx.dq.num_arrows(); ++h) ctx.arrow_image.push_back(MapArrow(ctx.dq, a, h));

  // c(h) = -1 on the forward arrow of edges that run against an a-invariant
  // orientation of their orbit.
  std::vector<int> c(ctx.dq.num_arrows(), 1);
  for (int k = 0; k < ctx.od.num_edge_orbits(); ++k) {
    const int e0 = ctx.od.edge_orbits[k].front();
    const Edge& first = q.edges()[e0];
    if (first.src == first.tgt) continue;
    std::vector<std::pair<int, int>> flips;
    int e = e0, s = first.src;
    do {
      if (q.edges()[e].src != s) flips.emplace_back(e, s);
      e = a.edge(e);
      s = a.vertex(s);
    } while (e != e0);
    if (s != first.src) {
      ctx.unorientable_edge_orbits.push_back(k);
      continue;
    }
    for (const auto& [edge, unused] : flips) c[2 * edge] = -1;
  }
  for (int h = 0; h < ctx.dq.num_arrows(); ++h) {
    ctx.arrow_twist.push_back(mode == RelationMode::kSigned ? c[h] * c[ctx.arrow_image[h]] : 1);
  }
  return ctx;
}

void CheckOrbitConstant(const ThetaContext& ctx, const DimensionVector& v, const DimensionVector& w) {
  const int n = ctx.dq.base.num_vertices();
  if (v.size() != n || w.size() != n) {
    throw Error(ErrorCode::kShapeMismatch, "dimension vectors need " + std::to_string(n) + " entries");
  }
  for (int i = 0; i < v.size(); ++i) {
    const int ai = ctx.a.vertex(i);
    if (v[ai] != v[i] || w[ai] != w[i]) {
      throw Error(ErrorCode::kNotOrbitConstant,
                  "dimensions differ between " + Name(ctx, i) + " and " + Name(ctx, ai));
    }
  }
}

EigenProfile ComputeEigenProfile(const RationalMatrix& g, int e) {
  EigenProfile p;
  const CyclotomicMatrix c = ToCyclotomic(g);
  int total = 0;
  for (int j = 1; j <= e; ++j) {
    EigenPiece piece;
    piece.j = j;
    piece.eigenvalue = Cyclotomic::RootOfUnity(e, j);
    piece.dimension = Eigenspace(c, piece.eigenvalue).cols();
    total += piece.dimension;
    p.pieces.push_back(piece);
  }
  p.outside = g.rows() - total;
  return p;
}

ThetaWitness BuildThetaWitness(const ThetaContext& ctx, const RationalModule& m1, const RationalMaps& g,
                               const RationalMaps& sigma) {
  CheckShapes(ctx.dq, m1);
  CheckOrbitConstant(ctx, m1.v, m1.w);
  CheckSigma(ctx, m1.w, sigma);
  if (ctx.od.n > 2) {
    throw Error(ErrorCode::kPreconditionViolation, "the witness construction needs theta^2 = id");
  }
  for (int i = 0; i < m1.v.size(); ++i) {
    if (!m1.I[i].IsZero() || !m1.J[i].IsZero()) {
      throw Error(ErrorCode::kPreconditionViolation, "m1 must have I = J = 0");
    }
  }
  const RelationResult rel = CheckRelations(ctx.dq, m1, ctx.mode);
  if (!rel.ok) throw Error(ErrorCode::kRelationViolation, "relation fails at vertex " + Name(ctx, rel.vertex));

  ThetaWitness out;
  if (IsStable(ctx.dq, m1, ctx.mode)) {
    if (FindTransition(ctx, m1, sigma)) {
      throw Error(ErrorCode::kPreconditionViolation, "m1 is theta-stable");
    }
  } else {
    out.m1_check_skipped = true;
  }
  const RationalModule second = Act(ctx.dq, g, ApplyTheta(ctx, m1, sigma));
  out.module = DirectSum(ctx.dq, m1, second);
  for (const auto& s : sigma) out.sigma.push_back(BlockDiagonal(s, s));

  const RationalMaps moved = Transport(ctx, g);
  const RationalMaps star = Star(g, ctx.a);
  RationalMaps block_diagonal;
  for (int i = 0; i < m1.v.size(); ++i) {
    const int d = m1.v[i];
    const RationalMatrix g_inv = *g[i].Inverse();
    RationalMatrix w(2 * d, 2 * d);
    w.SetBlock(0, d, g_inv);
    w.SetBlock(d, 0, moved[i]);
    out.witness.push_back(w);
    block_diagonal.push_back(BlockDiagonal(star[i], g_inv));
  }
  if (!VerifyTransition(ctx, out.module, out.sigma, out.witness)) {
    throw Error(ErrorCode::kPreconditionViolation, "exchanged witness failed verification");
  }
  out.block_diagonal_verifies = VerifyTransition(ctx, out.module, out.sigma, block_diagonal);
  for (int i = 0; i < m1.v.size(); ++i) {
    if (ctx.a.vertex(i) != i) continue;
    const int e = ctx.od.vertex_e[i];
    out.fixed_vertices.push_back({i, e, ComputeEigenProfile(out.witness[i], e)});
  }
  return out;
}

bool CheckFramedEmbedding(const DoubledQuiver& dq, const RationalMaps& xi, const RationalModule& sub,
                          const RationalModule& m) {
  CheckShapes(dq, sub);
  CheckShapes(dq, m);
  const int n = m.v.size();
  if (!(sub.w == m.w)) throw Error(ErrorCode::kShapeMismatch, "framings differ");
  if (static_cast<int>(xi.size()) != n) throw Error(ErrorCode::kShapeMismatch, "one xi_i per vertex");
  for (int i = 0; i < n; ++i) {
    if (xi[i].rows() != m.v[i] || xi[i].cols() != sub.v[i]) {
      throw Error(ErrorCode::kShapeMismatch, "xi at vertex " + dq.base.vertices()[i] + " has shape " +
                                                 xi[i].ShapeString());
    }
    if (xi[i].Rank() != sub.v[i]) return false;
    if (xi[i] * sub.I[i] != m.I[i] || m.J[i] * xi[i] != sub.J[i]) return false;
  }
  for (int h = 0; h < dq.num_arrows(); ++h) {
    const Arrow& a = dq.arrows[h];
    if (xi[a.tgt] * sub.B[h] != m.B[h] * xi[a.src]) return false;
  }
  return true;
}

bool HeckeProfile(const ThetaContext& ctx, const RationalMaps& xi, const RationalModule& sub,
                  const RationalModule& m, int vertex, bool at_most) {
  if (!CheckFramedEmbedding(ctx.dq, xi, sub, m)) {
    throw Error(ErrorCode::kNotAnEmbedding, "xi is not a framed embedding");
  }
  const int orbit = ctx.od.vertex_orbit_of[vertex];
  int total = 0;
  for (int j = 0; j < m.v.size(); ++j) {
    const int codim = m.v[j] - sub.v[j];
    total += codim;
    if (ctx.od.vertex_orbit_of[j] != orbit) {
      if (codim != 0) return false;
    } else if (at_most ? codim > 1 : codim != 1) {
      return false;
    }
  }
  return total > 0;
}

Theorem5Result Theorem5Verify(const ThetaContext& ctx, const RationalMaps& xi, const RationalModule& sub,
                              const RationalMaps& g_sub, const RationalModule& m, const RationalMaps& g,
                              const RationalMaps& sigma) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::kPreconditionViolation, what);
  };
  try {
    require(IsStable(ctx.dq, sub, ctx.mode), "submodule is not stable");
    require(IsStable(ctx.dq, m, ctx.mode), "module is not stable");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRelationViolation) throw;
    require(false, e.what());
  }
  require(VerifyTransition(ctx, sub, sigma, g_sub), "submodule transition does not verify");
  require(VerifyTransition(ctx, m, sigma, g), "module transition does not verify");
  require(CheckFramedEmbedding(ctx.dq, xi, sub, m), "xi is not a framed embedding");

  for (int x = 0; x < m.v.size(); ++x) {
    const int e = ctx.od.vertex_e[x];
    const CyclotomicMatrix c_sub = ToCyclotomic(TransitionComposite(ctx, g_sub, x));
    const CyclotomicMatrix c = ToCyclotomic(TransitionComposite(ctx, g, x));
    const CyclotomicMatrix embed = ToCyclotomic(xi[x]);
    for (int j = 1; j <= e; ++j) {
      const Cyclotomic lambda = Cyclotomic::RootOfUnity(e, j);
      const CyclotomicMatrix image = embed * Eigenspace(c_sub, lambda);
      const CyclotomicMatrix defect = (c - CyclotomicMatrix::Scalar(c.rows(), lambda)) * image;
      for (int col = 0; col < defect.cols(); ++col) {
        if (!defect.Column(col).IsZero()) return {false, x, j, image.Column(col)};
      }
    }
  }
  return {};
}

// Recipe: choose sigma and block-diagonal twists g = g_sub + g_quot with
// orbit composites of finite order, average random block upper-triangular
// data (quotient maps zero) over T = g^{-1} theta so that theta(M) = g M,
// solve the relation for I inside the sub block and average again, keep the
// result when stable, then conjugate M and the submodule by independent
// random elements of G_V and G_V'.
Theorem5Instance GenerateTheorem5Instance(const ThetaContext& ctx, const DimensionVector& v_sub,
                                          const DimensionVector& v, const DimensionVector& w, Rng& rng) {
  const DoubledQuiver& dq = ctx.dq;
  if (!IsAdmissible(dq.base, ctx.a)) {
    throw Error(ErrorCode::kPreconditionViolation, "generation requires an admissible automorphism");
  }
  CheckOrbitConstant(ctx, v, w);
  CheckOrbitConstant(ctx, v_sub, w);
  const int n = v.size();
  std::vector<int> quot(n);
  for (int i = 0; i < n; ++i) {
    quot[i] = v[i] - v_sub[i];
    if (quot[i] < 0) throw Error(ErrorCode::kPreconditionViolation, "v_sub must be at most v");
  }
  const DimensionVector v_quot(quot);

  for (int attempt = 0; attempt < 100; ++attempt) {
    const RationalMaps sigma = RandomTwist<Rational>(ctx, w, rng);
    const RationalMaps g1 = RandomTwist<Rational>(ctx, v_sub, rng, true);
    const RationalMaps g2 = RandomTwist<Rational>(ctx, v_quot, rng, true);
    RationalMaps g, g_inv;
    for (int i = 0; i < n; ++i) {
      g.push_back(BlockDiagonal(g1[i], g2[i]));
      g_inv.push_back(*g.back().Inverse());
    }
    RationalModule m = RationalModule::Zero(dq, v, w);
    for (int h = 0; h < dq.num_arrows(); ++h) {
      const int s = dq.arrows[h].src, t = dq.arrows[h].tgt;
      m.B[h].SetBlock(0, 0, RandomMatrix<Rational>(v_sub[t], v[s], rng));
    }
    for (int i = 0; i < n; ++i) m.J[i] = RandomMatrix<Rational>(w[i], v[i], rng);
    m = AverageFixed(ctx, m, g_inv, sigma);

    bool solved = true;
    for (int i = 0; i < n && solved; ++i) {
      const RationalMatrix r = -RelationAt(dq, m, i, ctx.mode);
      if (!r.Block(v_sub[i], 0, quot[i], v[i]).IsZero()) {
        throw Error(ErrorCode::kPreconditionViolation, "quotient block of the relation is nonzero");
      }
      auto x = internal::RandomSolution(m.J[i].Transpose(), r.Block(0, 0, v_sub[i], v[i]).Transpose(), rng);
      if (!x) {
        solved = false;
      } else {
        m.I[i] = RationalMatrix(v[i], w[i]);
        m.I[i].SetBlock(0, 0, x->Transpose());
      }
    }
    if (!solved) continue;
    m = AverageFixed(ctx, m, g_inv, sigma);
    if (!CheckRelations(dq, m, ctx.mode).ok) {
      throw Error(ErrorCode::kPreconditionViolation, "averaging broke the relation");
    }
    if (!IsStable(dq, m, ctx.mode)) continue;

    Theorem5Instance out;
    out.sigma = sigma;
    out.sub = Restrict(dq, m, v_sub);
    out.m = m;
    const RationalMaps h = RandomGroupElement<Rational>(v, rng);
    const RationalMaps h_sub = RandomGroupElement<Rational>(v_sub, rng);
    const RationalMaps h_moved = Transport(ctx, h), h_sub_moved = Transport(ctx, h_sub);
    out.m = Act(dq, h, m);
    out.sub = Act(dq, h_sub, out.sub);
    for (int i = 0; i < n; ++i) {
      RationalMatrix inclusion(v[i], v_sub[i]);
      for (int k = 0; k < v_sub[i]; ++k) inclusion(k, k) = 1;
      const RationalMatrix h_sub_inv = *h_sub[i].Inverse();
      out.xi.push_back(h[i] * inclusion * h_sub_inv);
      out.g.push_back(h_moved[i] * g[i] * *h[i].Inverse());
      out.g_sub.push_back(h_sub_moved[i] * g1[i] * h_sub_inv);
    }
    if (!VerifyTransition(ctx, out.m, sigma, out.g) || !VerifyTransition(ctx, out.sub, sigma, out.g_sub)) {
      throw Error(ErrorCode::kPreconditionViolation, "generated transition failed verification");
    }
    return out;
  }
  throw Error(ErrorCode::kPreconditionViolation, "no stable instance found; enlarge the framing");
}

}  // namespace qfold
