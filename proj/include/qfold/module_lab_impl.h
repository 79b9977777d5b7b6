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

// Template definitions for module_lab.h.

#ifndef QFOLD_MODULE_LAB_IMPL_H_
#define QFOLD_MODULE_LAB_IMPL_H_

#include <algorithm>
#include <string>

namespace qfold {
namespace internal {

inline std::string VertexName(const DoubledQuiver& dq, int v) { return dq.base.vertices()[v]; }

template <typename F>
Matrix<F> InverseOrThrow(const Matrix<F>& m, const std::string& what) {
  auto inv = m.Inverse();
  if (!inv) throw Error(ErrorCode::kNotInvertible, what + " is not invertible");
  return *inv;
}

template <typename F>
F FromInt(int64_t x) {
  return F(static_cast<long>(x));
}

// A random solution X of a X = rhs, or nullopt.
template <typename F>
std::optional<Matrix<F>> RandomSolution(const Matrix<F>& a, const Matrix<F>& rhs, Rng& rng) {
  auto x = a.Solve(rhs);
  if (!x) return std::nullopt;
  const Matrix<F> kernel = a.Kernel();
  if (kernel.cols() > 0) *x += kernel * RandomMatrix<F>(kernel.cols(), rhs.cols(), rng);
  return x;
}

}  // namespace internal

template <typename F>
FramedModule<F> FramedModule<F>::Zero(const DoubledQuiver& dq, const DimensionVector& v,
                                      const DimensionVector& w) {
  FramedModule m;
  m.v = v;
  m.w = w;
  for (const Arrow& h : dq.arrows) m.B.emplace_back(v[h.tgt], v[h.src]);
  for (int i = 0; i < v.size(); ++i) {
    m.I.emplace_back(v[i], w[i]);
    m.J.emplace_back(w[i], v[i]);
  }
  return m;
}

template <typename F>
void CheckShapes(const DoubledQuiver& dq, const FramedModule<F>& m) {
  const int n = dq.base.num_vertices();
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kShapeMismatch, msg); };
  if (m.v.size() != n || m.w.size() != n) fail("dimension vectors must have one entry per vertex");
  if (static_cast<int>(m.B.size()) != dq.num_arrows()) fail("one B matrix per doubled arrow is required");
  if (static_cast<int>(m.I.size()) != n || static_cast<int>(m.J.size()) != n) {
    fail("one I and one J matrix per vertex is required");
  }
  for (int h = 0; h < dq.num_arrows(); ++h) {
    const Arrow& a = dq.arrows[h];
    if (m.B[h].rows() != m.v[a.tgt] || m.B[h].cols() != m.v[a.src]) {
      fail("B on arrow " + std::to_string(h) + " has shape " + m.B[h].ShapeString());
    }
  }
  for (int i = 0; i < n; ++i) {
    if (m.I[i].rows() != m.v[i] || m.I[i].cols() != m.w[i]) {
      fail("I at vertex " + internal::VertexName(dq, i) + " has shape " + m.I[i].ShapeString());
    }
    if (m.J[i].rows() != m.w[i] || m.J[i].cols() != m.v[i]) {
      fail("J at vertex " + internal::VertexName(dq, i) + " has shape " + m.J[i].ShapeString());
    }
  }
}

template <typename F>
Matrix<F> RelationAt(const DoubledQuiver& dq, const FramedModule<F>& m, int i, RelationMode mode) {
  Matrix<F> acc = m.I[i] * m.J[i];
  for (int h = 0; h < dq.num_arrows(); ++h) {
    if (dq.arrows[h].src != i) continue;
    Matrix<F> term = m.B[DoubledQuiver::Reverse(h)] * m.B[h];
    if (mode == RelationMode::kSigned && dq.arrows[h].sign < 0) term = -term;
    acc += term;
  }
  return acc;
}

template <typename F>
RelationResult CheckRelations(const DoubledQuiver& dq, const FramedModule<F>& m, RelationMode mode) {
  CheckShapes(dq, m);
  for (int i = 0; i < m.v.size(); ++i) {
    if (!RelationAt(dq, m, i, mode).IsZero()) return {false, i};
  }
  return {};
}

template <typename F>
VertexMaps<F> DestabilizingSubspace(const DoubledQuiver& dq, const FramedModule<F>& m) {
  const int n = m.v.size();
  VertexMaps<F> s(n);
  for (int i = 0; i < n; ++i) s[i] = m.J[i].Kernel();
  for (bool changed = true; changed;) {
    changed = false;
    for (int h = 0; h < dq.num_arrows(); ++h) {
      const Arrow& a = dq.arrows[h];
      if (s[a.src].cols() == 0) continue;
      // Rows annihilating S_t.
      const Matrix<F> ann = s[a.tgt].Transpose().Kernel().Transpose();
      const Matrix<F> keep = (ann * m.B[h] * s[a.src]).Kernel();
      if (keep.cols() < s[a.src].cols()) {
        s[a.src] = s[a.src] * keep;
        changed = true;
      }
    }
  }
  return s;
}

template <typename F>
bool IsStable(const DoubledQuiver& dq, const FramedModule<F>& m, RelationMode mode) {
  const RelationResult r = CheckRelations(dq, m, mode);
  if (!r.ok) {
    throw Error(ErrorCode::kRelationViolation,
                "relation fails at vertex " + internal::VertexName(dq, r.vertex));
  }
  for (const auto& basis : DestabilizingSubspace(dq, m)) {
    if (basis.cols() > 0) return false;
  }
  return true;
}

namespace internal {

// Every subspace of F_p^d, as column bases of reduced echelon form.
template <uint32_t P>
std::vector<Matrix<PrimeField<P>>> AllSubspaces(int d) {
  using F = PrimeField<P>;
  std::vector<Matrix<F>> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> pivots;
    for (int c = 0; c < d; ++c)
      if (mask >> c & 1) pivots.push_back(c);
    const int k = static_cast<int>(pivots.size());
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < d; ++c)
        if (!(mask >> c & 1)) free.emplace_back(r, c);
    int64_t count = 1;
    for (size_t f = 0; f < free.size(); ++f) count *= P;
    for (int64_t code = 0; code < count; ++code) {
      Matrix<F> rows(k, d);
      for (int r = 0; r < k; ++r) rows(r, pivots[r]) = F(1);
      int64_t x = code;
      for (const auto& [r, c] : free) {
        rows(r, c) = F(x % P);
        x /= P;
      }
      out.push_back(rows.Transpose());
    }
  }
  return out;
}

}  // namespace internal

template <uint32_t P>
bool BruteStability(const DoubledQuiver& dq, const FramedModule<PrimeField<P>>& m, int64_t limit) {
  using F = PrimeField<P>;
  CheckShapes(dq, m);
  const int n = m.v.size();
  std::vector<std::vector<Matrix<F>>> candidates(n);
  int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (m.v[i] > 4) throw Error(ErrorCode::kTooLarge, "brute force is limited to dimension 4");
    for (auto& s : internal::AllSubspaces<P>(m.v[i])) {
      if ((m.J[i] * s).IsZero()) candidates[i].push_back(std::move(s));
    }
    total *= static_cast<int64_t>(candidates[i].size());
    if (total > limit) throw Error(ErrorCode::kTooLarge, "too many graded subspaces to enumerate");
  }
  std::vector<size_t> pick(n, 0);
  for (;;) {
    bool nonzero = false;
    for (int i = 0; i < n; ++i) nonzero = nonzero || candidates[i][pick[i]].cols() > 0;
    if (nonzero) {
      bool invariant = true;
      for (int h = 0; h < dq.num_arrows() && invariant; ++h) {
        const Arrow& a = dq.arrows[h];
        invariant = ColumnSpanContained(m.B[h] * candidates[a.src][pick[a.src]],
                                        candidates[a.tgt][pick[a.tgt]]);
      }
      if (invariant) return false;
    }
    int i = 0;
    while (i < n && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == n) return true;
  }
}

template <typename F>
FramedModule<F> Act(const DoubledQuiver& dq, const VertexMaps<F>& g, const FramedModule<F>& m) {
  CheckShapes(dq, m);
  const int n = m.v.size();
  if (static_cast<int>(g.size()) != n) throw Error(ErrorCode::kShapeMismatch, "one g_i per vertex");
  VertexMaps<F> inv(n);
  for (int i = 0; i < n; ++i) {
    if (g[i].rows() != m.v[i] || g[i].cols() != m.v[i]) {
      throw Error(ErrorCode::kShapeMismatch, "g at vertex " + internal::VertexName(dq, i) +
                                                 " has shape " + g[i].ShapeString());
    }
    inv[i] = internal::InverseOrThrow(g[i], "g at vertex " + internal::VertexName(dq, i));
  }
  FramedModule<F> out = m;
  for (int h = 0; h < dq.num_arrows(); ++h) {
    out.B[h] = g[dq.arrows[h].tgt] * m.B[h] * inv[dq.arrows[h].src];
  }
  for (int i = 0; i < n; ++i) {
    out.I[i] = g[i] * m.I[i];
    out.J[i] = m.J[i] * inv[i];
  }
  return out;
}

template <typename F>
VertexMaps<F> Star(const VertexMaps<F>& g, const DiagramAutomorphism& a) {
  const int n = static_cast<int>(a.vertex_perm().size());
  if (static_cast<int>(g.size()) != n) throw Error(ErrorCode::kIndexMismatch, "one g_i per vertex");
  VertexMaps<F> out(n);
  for (int i = 0; i < n; ++i) {
    if (g[a.vertex(i)].rows() != g[i].rows() || !g[i].IsSquare()) {
      throw Error(ErrorCode::kIndexMismatch, "g is not orbit-constant in size");
    }
    out[i] = g[a.vertex(i)];
  }
  return out;
}

template <typename F>
VertexMaps<F> Transport(const ThetaContext& ctx, const VertexMaps<F>& g) {
  const int n = static_cast<int>(ctx.inverse_vertex.size());
  if (static_cast<int>(g.size()) != n) throw Error(ErrorCode::kIndexMismatch, "one g_i per vertex");
  VertexMaps<F> out(n);
  for (int x = 0; x < n; ++x) out[x] = g[ctx.inverse_vertex[x]];
  return out;
}

template <typename F>
Matrix<F> SigmaComposite(const ThetaContext& ctx, const VertexMaps<F>& sigma, int vertex) {
  Matrix<F> c = sigma[vertex];
  for (int x = ctx.a.vertex(vertex); x != vertex; x = ctx.a.vertex(x)) c = sigma[x] * c;
  return c;
}

template <typename F>
Matrix<F> TransitionComposite(const ThetaContext& ctx, const VertexMaps<F>& g, int vertex) {
  Matrix<F> c = g[vertex];
  for (int x = ctx.inverse_vertex[vertex]; x != vertex; x = ctx.inverse_vertex[x]) c = g[x] * c;
  return c;
}

template <typename F>
void CheckSigma(const ThetaContext& ctx, const DimensionVector& w, const VertexMaps<F>& sigma) {
  const int n = w.size();
  if (static_cast<int>(sigma.size()) != n) throw Error(ErrorCode::kShapeMismatch, "one sigma_i per vertex");
  for (int i = 0; i < n; ++i) {
    if (sigma[i].rows() != w[ctx.a.vertex(i)] || sigma[i].cols() != w[i]) {
      throw Error(ErrorCode::kShapeMismatch, "sigma at vertex " + internal::VertexName(ctx.dq, i) +
                                                 " has shape " + sigma[i].ShapeString());
    }
  }
  for (int i = 0; i < n; ++i) {
    const Matrix<F> c = SigmaComposite(ctx, sigma, i);
    if (c.Power(ctx.od.vertex_e[i]) != Matrix<F>::Identity(w[i])) {
      throw Error(ErrorCode::kSigmaConstraintViolated,
                  "sigma orbit composite at vertex " + internal::VertexName(ctx.dq, i) +
                      " does not have order dividing " + std::to_string(ctx.od.vertex_e[i]));
    }
  }
}

template <typename F>
FramedModule<F> ApplyTheta(const ThetaContext& ctx, const FramedModule<F>& m, const VertexMaps<F>& sigma) {
  CheckShapes(ctx.dq, m);
  CheckOrbitConstant(ctx, m.v, m.w);
  CheckSigma(ctx, m.w, sigma);
  FramedModule<F> out = m;
  for (int h = 0; h < ctx.dq.num_arrows(); ++h) {
    out.B[ctx.arrow_image[h]] = m.B[h] * internal::FromInt<F>(ctx.arrow_twist[h]);
  }
  for (int i = 0; i < m.v.size(); ++i) {
    const int ai = ctx.a.vertex(i);
    out.J[ai] = sigma[i] * m.J[i];
    out.I[ai] = m.I[i] * internal::InverseOrThrow(sigma[i], "sigma");
  }
  return out;
}

template <typename F>
bool VerifyTransition(const ThetaContext& ctx, const FramedModule<F>& m, const VertexMaps<F>& sigma,
                      const VertexMaps<F>& g) {
  try {
    return ApplyTheta(ctx, m, sigma) == Act(ctx.dq, g, m);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotInvertible || e.code() == ErrorCode::kShapeMismatch) return false;
    throw;
  }
}

template <typename F>
std::optional<VertexMaps<F>> FindTransition(const ThetaContext& ctx, const FramedModule<F>& m,
                                            const VertexMaps<F>& sigma) {
  if (!IsStable(ctx.dq, m, ctx.mode)) {
    throw Error(ErrorCode::kNotStable, "transition matrices are only unique for stable modules");
  }
  const FramedModule<F> t = ApplyTheta(ctx, m, sigma);
  const int n = m.v.size();
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + m.v[i] * m.v[i];
  auto var = [&](int i, int r, int c) { return offset[i] + r * m.v[i] + c; };
  std::vector<std::vector<std::pair<int, F>>> rows;
  std::vector<F> rhs;
  // g_t B_h - B'_h g_s = 0
  for (int h = 0; h < ctx.dq.num_arrows(); ++h) {
    const int s = ctx.dq.arrows[h].src, tg = ctx.dq.arrows[h].tgt;
    for (int r = 0; r < m.v[tg]; ++r)
      for (int c = 0; c < m.v[s]; ++c) {
        std::vector<std::pair<int, F>> row;
        for (int k = 0; k < m.v[tg]; ++k) row.emplace_back(var(tg, r, k), m.B[h](k, c));
        for (int k = 0; k < m.v[s]; ++k) row.emplace_back(var(s, k, c), -t.B[h](r, k));
        rows.push_back(std::move(row));
        rhs.push_back(F(0));
      }
  }
  for (int i = 0; i < n; ++i) {
    // g_i I_i = I'_i
    for (int r = 0; r < m.v[i]; ++r)
      for (int c = 0; c < m.w[i]; ++c) {
        std::vector<std::pair<int, F>> row;
        for (int k = 0; k < m.v[i]; ++k) row.emplace_back(var(i, r, k), m.I[i](k, c));
        rows.push_back(std::move(row));
        rhs.push_back(t.I[i](r, c));
      }
    // J'_i g_i = J_i
    for (int r = 0; r < m.w[i]; ++r)
      for (int c = 0; c < m.v[i]; ++c) {
        std::vector<std::pair<int, F>> row;
        for (int k = 0; k < m.v[i]; ++k) row.emplace_back(var(i, k, c), t.J[i](r, k));
        rows.push_back(std::move(row));
        rhs.push_back(m.J[i](r, c));
      }
  }
  Matrix<F> a(static_cast<int>(rows.size()), offset[n]);
  Matrix<F> b(static_cast<int>(rows.size()), 1);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [col, value] : rows[r]) a(int(r), col) += value;
    b(int(r), 0) = rhs[r];
  }
  const auto x = a.Solve(b);
  if (!x) return std::nullopt;
  VertexMaps<F> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = Matrix<F>(m.v[i], m.v[i]);
    for (int r = 0; r < m.v[i]; ++r)
      for (int c = 0; c < m.v[i]; ++c) g[i](r, c) = (*x)(var(i, r, c), 0);
    if (!g[i].Inverse()) return std::nullopt;
  }
  if (!VerifyTransition(ctx, m, sigma, g)) {
    throw Error(ErrorCode::kPreconditionViolation, "transition solution failed re-verification");
  }
  return g;
}

template <typename F>
Matrix<F> RandomMatrix(int rows, int cols, Rng& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  Matrix<F> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = internal::FromInt<F>(dist(rng));
  return m;
}

template <typename F>
Matrix<F> RandomInvertible(int n, Rng& rng) {
  for (;;) {
    Matrix<F> m = RandomMatrix<F>(n, n, rng);
    if (m.Inverse()) return m;
  }
}

template <typename F>
Matrix<F> RandomFiniteOrder(int n, int e, Rng& rng) {
  Matrix<F> k(n, n);
  int filled = 0;
  while (filled < n) {
    std::vector<int> options;
    for (int d = 1; d <= e; ++d)
      if (e % d == 0 && EulerPhi(d) <= n - filled) options.push_back(d);
    const int d = options[rng() % options.size()];
    const auto& phi = CyclotomicPolynomial(d);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int r = 1; r < deg; ++r) k(filled + r, filled + r - 1) = F(1);
    for (int r = 0; r < deg; ++r) {
      k(filled + r, filled + deg - 1) = internal::FromInt<F>(-phi[r].get_num().get_si());
    }
    filled += deg;
  }
  const Matrix<F> p = RandomInvertible<F>(n, rng);
  return p * k * *p.Inverse();
}

template <typename F>
VertexMaps<F> RandomTwist(const ThetaContext& ctx, const DimensionVector& dims, Rng& rng, bool transition) {
  VertexMaps<F> out(dims.size());
  for (const auto& orbit : ctx.od.vertex_orbits) {
    const int lift = orbit.front();
    const int dim = dims[lift];
    std::vector<int> cycle = {lift};
    while (static_cast<int>(cycle.size()) < static_cast<int>(orbit.size())) {
      cycle.push_back(transition ? ctx.inverse_vertex[cycle.back()] : ctx.a.vertex(cycle.back()));
    }
    Matrix<F> partial = Matrix<F>::Identity(dim);
    for (size_t k = 0; k + 1 < cycle.size(); ++k) {
      out[cycle[k]] = RandomInvertible<F>(dim, rng);
      partial = out[cycle[k]] * partial;
    }
    out[cycle.back()] = RandomFiniteOrder<F>(dim, ctx.od.vertex_e[lift], rng) * *partial.Inverse();
  }
  return out;
}

template <typename F>
VertexMaps<F> RandomGroupElement(const DimensionVector& dims, Rng& rng) {
  VertexMaps<F> out;
  for (int d : dims.values()) out.push_back(RandomInvertible<F>(d, rng));
  return out;
}

template <typename F>
FramedModule<F> RandomData(const DoubledQuiver& dq, const DimensionVector& v, const DimensionVector& w,
                           Rng& rng) {
  FramedModule<F> m = FramedModule<F>::Zero(dq, v, w);
  for (auto& b : m.B) b = RandomMatrix<F>(b.rows(), b.cols(), rng);
  for (auto& x : m.I) x = RandomMatrix<F>(x.rows(), x.cols(), rng);
  for (auto& x : m.J) x = RandomMatrix<F>(x.rows(), x.cols(), rng);
  return m;
}

template <typename F>
FramedModule<F> RandomRelationModule(const DoubledQuiver& dq, const DimensionVector& v,
                                     const DimensionVector& w, Rng& rng, RelationMode mode) {
  const int n = v.size();
  for (int attempt = 0;; ++attempt) {
    // Each arrow survives with probability shrinking over attempts; the
    // last resort B = 0 always admits I.
    const int keep_percent = attempt >= 8 ? 0 : 100 - 12 * attempt;
    FramedModule<F> m = FramedModule<F>::Zero(dq, v, w);
    for (auto& b : m.B) {
      if (static_cast<int>(rng() % 100) < keep_percent) b = RandomMatrix<F>(b.rows(), b.cols(), rng);
    }
    for (auto& j : m.J) {
      if (rng() % 4 != 0) j = RandomMatrix<F>(j.rows(), j.cols(), rng);
    }
    bool solved = true;
    for (int i = 0; i < n && solved; ++i) {
      m.I[i] = Matrix<F>(v[i], w[i]);
      const Matrix<F> r = -RelationAt(dq, m, i, mode);
      auto x = internal::RandomSolution(m.J[i].Transpose(), r.Transpose(), rng);
      if (!x) {
        solved = false;
      } else {
        m.I[i] = x->Transpose();
      }
    }
    if (solved) return m;
  }
}

}  // namespace qfold

#endif  // QFOLD_MODULE_LAB_IMPL_H_
