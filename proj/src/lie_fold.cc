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

#include "qfold/lie_fold.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qfold/error.h"

namespace qfold {

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries, std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
  const int n = rank();
  if (labels_.empty()) {
    for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch, "one label per row is required");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries_[i].size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "Cartan matrix must be square");
    }
    if (entries_[i][i] != 2) throw Error(ErrorCode::kDimensionMismatch, "diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0) {
        throw Error(ErrorCode::kDimensionMismatch, "off-diagonal entries must be <= 0");
      }
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0)) {
        throw Error(ErrorCode::kDimensionMismatch, "zero pattern must be symmetric");
      }
    }
  }
}

CartanMatrix CartanMatrix::Transpose() const {
  std::vector<std::vector<int>> t(rank(), std::vector<int>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) t[j][i] = entries_[i][j];
  return CartanMatrix(std::move(t), labels_);
}

RationalMatrix CartanMatrix::ToRational() const {
  RationalMatrix m(rank(), rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) m(i, j) = entries_[i][j];
  return m;
}

bool CartanMatrix::IsSymmetric() const { return *this == Transpose(); }

std::string TypeLabel::ToString() const {
  switch (family) {
    case Family::kA: return "A" + std::to_string(rank);
    case Family::kB: return "B" + std::to_string(rank);
    case Family::kC: return "C" + std::to_string(rank);
    case Family::kD: return "D" + std::to_string(rank);
    case Family::kE: return "E" + std::to_string(rank);
    case Family::kF: return "F" + std::to_string(rank);
    case Family::kG: return "G" + std::to_string(rank);
    case Family::kAffineA: return "affine-A" + std::to_string(rank);
    case Family::kAffineD: return "affine-D" + std::to_string(rank);
    case Family::kOther: return "other";
  }
  return "other";
}

bool EquivalentTypes(const TypeLabel& a, const TypeLabel& b) {
  auto canonical = [](TypeLabel t) {
    if (t.rank == 1 && (t.family == Family::kB || t.family == Family::kC)) t.family = Family::kA;
    if (t.rank == 2 && t.family == Family::kB) t.family = Family::kC;
    if (t.rank == 3 && t.family == Family::kD) t.family = Family::kA;
    return t;
  };
  return canonical(a) == canonical(b);
}

CartanMatrix CartanFromQuiver(const Quiver& q) {
  if (q.HasSelfLoop()) throw Error(ErrorCode::kSelfLoop, "Cartan matrix needs a loop-free quiver");
  const int n = q.num_vertices();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const Edge& e : q.edges()) {
    c[e.src][e.tgt] -= 1;
    c[e.tgt][e.src] -= 1;
  }
  return CartanMatrix(std::move(c), q.vertices());
}

namespace {

std::vector<std::vector<int>> Neighbors(const CartanMatrix& c) {
  std::vector<std::vector<int>> out(c.rank());
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j)
      if (i != j && c(i, j) != 0) out[i].push_back(j);
  return out;
}

bool Connected(const CartanMatrix& c) {
  if (c.rank() == 0) return false;
  const auto nb = Neighbors(c);
  std::vector<bool> seen(c.rank(), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : nb[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == c.rank();
}

// S(i,j) = c(i,j) d_j, symmetric.
RationalMatrix SymmetrizedForm(const CartanMatrix& c, const std::vector<int>& d) {
  RationalMatrix s(c.rank(), c.rank());
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) s(i, j) = c(i, j) * d[j];
  return s;
}

bool PositiveDefinite(const RationalMatrix& s) {
  for (int k = 1; k <= s.rows(); ++k) {
    if (s.Block(0, 0, k, k).Determinant() <= 0) return false;
  }
  return true;
}

RationalMatrix DeleteIndex(const RationalMatrix& s, int skip) {
  const int n = s.rows() - 1;
  RationalMatrix out(n, n);
  for (int i = 0, a = 0; i <= n; ++i) {
    if (i == skip) continue;
    for (int j = 0, b = 0; j <= n; ++j) {
      if (j == skip) continue;
      out(a, b++) = s(i, j);
    }
    ++a;
  }
  return out;
}

// Lengths of the paths hanging off `center`.
std::vector<int> LegLengths(const std::vector<std::vector<int>>& nb, int center) {
  std::vector<int> legs;
  for (int start : nb[center]) {
    int len = 1, prev = center, cur = start;
    while (nb[cur].size() == 2) {
      const int next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(nb[cur].size() == 1 ? len : -1);
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

TypeLabel ClassifyFinite(const CartanMatrix& c) {
  const int n = c.rank();
  if (n == 1) return {Family::kA, 1};
  const auto nb = Neighbors(c);
  int doubles = 0, triples = 0, bi = -1, bj = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = c(i, j) * c(j, i);
      if (m == 2) {
        ++doubles;
        bi = i;
        bj = j;
      }
      if (m == 3) ++triples;
    }
  }
  if (triples == 1 && n == 2) return {Family::kG, 2};
  if (doubles == 1) {
    // c(i, j) = -2 marks alpha_i as the long root.
    const int long_root = c(bi, bj) == -2 ? bi : bj;
    if (n == 2) return {long_root == 0 ? Family::kB : Family::kC, 2};
    if (n == 4 && nb[bi].size() == 2 && nb[bj].size() == 2) return {Family::kF, 4};
    const int leaf = nb[bi].size() == 1 ? bi : bj;
    return {leaf == long_root ? Family::kC : Family::kB, n};
  }
  if (doubles == 0 && triples == 0) {
    int branch = -1;
    for (int v = 0; v < n; ++v) {
      if (nb[v].size() > 2) branch = v;
    }
    if (branch < 0) return {Family::kA, n};
    const auto legs = LegLengths(nb, branch);
    if (legs.size() == 3 && legs[0] == 1 && legs[1] == 1) return {Family::kD, n};
    if (legs.size() == 3 && legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
      return {Family::kE, n};
    }
  }
  return {Family::kOther, n};
}

TypeLabel ClassifyAffine(const CartanMatrix& c) {
  const int n = c.rank();
  if (n == 2 && c(0, 1) == -2 && c(1, 0) == -2) return {Family::kAffineA, 1};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && c(i, j) < -1) return {Family::kOther, n - 1};
  const auto nb = Neighbors(c);
  bool cycle = true;
  for (int v = 0; v < n; ++v) cycle = cycle && nb[v].size() == 2;
  if (cycle) return {Family::kAffineA, n - 1};
  if (n == 5) {
    for (int v = 0; v < n; ++v)
      if (nb[v].size() == 4) return {Family::kAffineD, 4};
  }
  int forks = 0;
  for (int v = 0; v < n; ++v) {
    if (nb[v].size() == 3) {
      int leaves = 0;
      for (int w : nb[v]) leaves += nb[w].size() == 1;
      if (leaves >= 2) ++forks;
    } else if (nb[v].size() > 3) {
      return {Family::kOther, n - 1};
    }
  }
  if (forks == 2) return {Family::kAffineD, n - 1};
  return {Family::kOther, n - 1};
}

}  // namespace

std::optional<std::vector<int>> Symmetrizer(const CartanMatrix& c) {
  const int n = c.rank();
  std::vector<Rational> d(n, Rational(0));
  const auto nb = Neighbors(c);
  for (int root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    std::vector<int> component = {root};
    d[root] = 1;
    for (size_t k = 0; k < component.size(); ++k) {
      const int i = component[k];
      for (int j : nb[i]) {
        // c(i,j) d_j = c(j,i) d_i
        const Rational dj = Rational(c(j, i)) * d[i] / c(i, j);
        if (d[j] == 0) {
          d[j] = dj;
          component.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    mpz_class den = 1;
    for (int v : component) den = lcm(den, d[v].get_den());
    mpz_class g = 0;
    for (int v : component) {
      d[v] *= den;
      g = gcd(g, d[v].get_num());
    }
    for (int v : component) d[v] /= g;
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    if (d[i] <= 0) return std::nullopt;
    out[i] = static_cast<int>(d[i].get_num().get_si());
  }
  return out;
}

bool IsFiniteType(const CartanMatrix& c) {
  const auto d = Symmetrizer(c);
  return d && PositiveDefinite(SymmetrizedForm(c, *d));
}

TypeLabel ClassifyCartan(const CartanMatrix& c) {
  const int n = c.rank();
  if (!Connected(c)) return {Family::kOther, n};
  const auto d = Symmetrizer(c);
  if (!d) return {Family::kOther, n};
  const RationalMatrix s = SymmetrizedForm(c, *d);
  if (PositiveDefinite(s)) return ClassifyFinite(c);
  if (n >= 2 && s.Determinant() == 0) {
    bool affine = true;
    for (int v = 0; v < n && affine; ++v) affine = PositiveDefinite(DeleteIndex(s, v));
    if (affine) return ClassifyAffine(c);
  }
  return {Family::kOther, n};
}

FoldedAlgebraData FoldCartan(const CartanMatrix& c, const std::vector<int>& vertex_perm) {
  const int n = c.rank();
  if (static_cast<int>(vertex_perm.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size differs from the rank");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c(vertex_perm[i], vertex_perm[j]) != c(i, j)) {
        throw Error(ErrorCode::kNotAdmissible, "permutation is not a diagram automorphism");
      }
  FoldedAlgebraData out;
  out.base = c;
  std::vector<int> orbit_of(n, -1);
  for (int start = 0; start < n; ++start) {
    if (orbit_of[start] >= 0) continue;
    std::vector<int> orbit;
    for (int x = start; orbit_of[x] < 0; x = vertex_perm[x]) {
      orbit_of[x] = static_cast<int>(out.orbits.size());
      orbit.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  for (const auto& orbit : out.orbits)
    for (int x : orbit)
      for (int y : orbit)
        if (x != y && c(x, y) != 0) {
          throw Error(ErrorCode::kNotAdmissible, "two vertices of one orbit are joined");
        }
  const int m = static_cast<int>(out.orbits.size());
  std::vector<std::vector<int>> folded(m, std::vector<int>(m, 0));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    std::string label;
    for (int x : out.orbits[a]) label += (label.empty() ? "" : "+") + c.labels()[x];
    labels.push_back(label);
    for (int b = 0; b < m; ++b) {
      std::optional<int> value;
      for (int rep : out.orbits[a]) {
        int sum = 0;
        for (int k : out.orbits[b]) sum += c(rep, k);
        if (value && *value != sum) {
          throw Error(ErrorCode::kRepresentativeDependence,
                      "folded entry depends on the orbit representative");
        }
        value = sum;
      }
      folded[a][b] = *value;
    }
  }
  out.folded = CartanMatrix(std::move(folded), std::move(labels));
  return out;
}

namespace {

RationalMatrix Unit(int dim, int r, int c) {
  RationalMatrix m(dim, dim);
  m(r, c) = 1;
  return m;
}

RationalMatrix Bracket(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

}  // namespace

Generators FoldedGenerators(int rank, DefiningFamily family, const std::vector<int>& vertex_perm) {
  if (static_cast<int>(vertex_perm.size()) != rank) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size differs from the rank");
  }
  std::vector<RationalMatrix> e;
  if (family == DefiningFamily::kA) {
    if (rank < 1) throw Error(ErrorCode::kUnsupportedFamily, "A needs rank >= 1");
    for (int k = 0; k < rank; ++k) e.push_back(Unit(rank + 1, k, k + 1));
  } else {
    if (rank < 3) throw Error(ErrorCode::kUnsupportedFamily, "D needs rank >= 3");
    const int dim = 2 * rank;
    // Basis v_1..v_n, v_-n..v_-1.
    auto idx = [dim](int i) { return i > 0 ? i - 1 : dim + i; };
    for (int k = 1; k < rank; ++k) {
      e.push_back(Unit(dim, idx(k), idx(k + 1)) - Unit(dim, idx(-(k + 1)), idx(-k)));
    }
    e.push_back(Unit(dim, idx(rank - 1), idx(-rank)) - Unit(dim, idx(rank), idx(-(rank - 1))));
  }
  std::vector<int> orbit_of(rank, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < rank; ++start) {
    if (orbit_of[start] >= 0) continue;
    orbits.emplace_back();
    for (int x = start; orbit_of[x] < 0; x = vertex_perm[x]) {
      orbit_of[x] = static_cast<int>(orbits.size()) - 1;
      orbits.back().push_back(x);
    }
  }
  Generators g;
  const int dim = e.front().rows();
  for (const auto& orbit : orbits) {
    RationalMatrix sum(dim, dim);
    for (int x : orbit) sum += e[x];
    g.e.push_back(sum);
    g.f.push_back(sum.Transpose());
    g.h.push_back(Bracket(sum, sum.Transpose()));
  }
  return g;
}

SerreResult SerreCheck(const CartanMatrix& c, const Generators& g) {
  const int n = c.rank();
  if (static_cast<int>(g.e.size()) != n || static_cast<int>(g.f.size()) != n ||
      static_cast<int>(g.h.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch, "generator count differs from the rank");
  }
  for (const auto* list : {&g.e, &g.f, &g.h})
    for (const auto& m : *list)
      if (m.rows() != g.e.front().rows() || !m.IsSquare()) {
        throw Error(ErrorCode::kDimensionMismatch, "generators act on different spaces");
      }
  auto fail = [](std::string what) { return SerreResult{false, std::move(what)}; };
  auto idx = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!Bracket(g.h[i], g.h[j]).IsZero()) return fail("[h,h] != 0 at " + idx(i, j));
      if (Bracket(g.h[i], g.e[j]) != g.e[j] * Rational(c(j, i))) {
        return fail("[h_i,e_j] != c(j,i) e_j at " + idx(i, j));
      }
      if (Bracket(g.h[i], g.f[j]) != g.f[j] * Rational(-c(j, i))) {
        return fail("[h_i,f_j] != -c(j,i) f_j at " + idx(i, j));
      }
      const RationalMatrix ef = Bracket(g.e[i], g.f[j]);
      if (i == j ? ef != g.h[i] : !ef.IsZero()) return fail("[e_i,f_j] != delta h at " + idx(i, j));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      RationalMatrix ad_e = g.e[j], ad_f = g.f[j];
      for (int k = 0; k < 1 - c(j, i); ++k) {
        ad_e = Bracket(g.e[i], ad_e);
        ad_f = Bracket(g.f[i], ad_f);
      }
      if (!ad_e.IsZero()) return fail("ad(e_i)^{1-c(j,i)} e_j != 0 at " + idx(i, j));
      if (!ad_f.IsZero()) return fail("ad(f_i)^{1-c(j,i)} f_j != 0 at " + idx(i, j));
    }
  }
  return {};
}

}  // namespace qfold
