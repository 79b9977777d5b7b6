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

#include "qfold/rep_branch.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "qfold/error.h"
#include "qfold/scalar.h"

namespace qfold {
namespace {

void RequireFinite(const CartanMatrix& c) {
  if (!IsFiniteType(c)) throw Error(ErrorCode::kNotFiniteType, "Cartan matrix is not of finite type");
}

void RequireShape(const CartanMatrix& c, const Weight& w) {
  if (static_cast<int>(w.size()) != c.rank()) {
    throw Error(ErrorCode::kIndexMismatch, "weight has " + std::to_string(w.size()) +
                                               " coordinates, rank is " + std::to_string(c.rank()));
  }
}

std::string WeightString(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

// Simple-root coordinates to fundamental-weight coordinates.
Weight RootToWeight(const CartanMatrix& c, const std::vector<int>& k) {
  Weight w(c.rank(), 0);
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) w[j] += k[i] * c(i, j);
  return w;
}

// (mu, alpha) for mu in weight coordinates, alpha in root coordinates.
int64_t Pair(const std::vector<int>& d, const Weight& mu, const std::vector<int>& alpha) {
  int64_t s = 0;
  for (size_t i = 0; i < mu.size(); ++i) s += int64_t{alpha[i]} * d[i] * mu[i];
  return s;
}

int64_t RootNorm(const CartanMatrix& c, const std::vector<int>& d, const std::vector<int>& k) {
  int64_t s = 0;
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) s += int64_t{k[i]} * k[j] * c(i, j) * d[j];
  return s;
}

// Height functional: sum of simple-root coordinates of w.
Rational Height(const RationalMatrix& inverse_cartan, const Weight& w) {
  Rational h = 0;
  for (int i = 0; i < inverse_cartan.rows(); ++i)
    for (int j = 0; j < inverse_cartan.cols(); ++j) h += Rational(w[j]) * inverse_cartan(j, i);
  return h;
}

}  // namespace

int64_t Character::Dimension() const {
  int64_t s = 0;
  for (const auto& [w, m] : multiplicity) s += m;
  return s;
}

int64_t Character::operator[](const Weight& w) const {
  auto it = multiplicity.find(w);
  return it == multiplicity.end() ? 0 : it->second;
}

RootSystem PositiveRoots(const CartanMatrix& c) {
  RequireFinite(c);
  const int n = c.rank();
  RootSystem rs;
  rs.cartan = c;
  rs.symmetrizer = *Symmetrizer(c);
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const std::vector<int> beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += beta[j] * c(j, i);
      std::vector<int> image = beta;
      image[i] -= p;
      if (std::any_of(image.begin(), image.end(), [](int x) { return x < 0; })) continue;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  rs.positive.assign(seen.begin(), seen.end());
  auto height = [](const std::vector<int>& k) { return std::accumulate(k.begin(), k.end(), 0); };
  std::stable_sort(rs.positive.begin(), rs.positive.end(),
                   [&](const auto& a, const auto& b) { return height(a) < height(b); });
  return rs;
}

bool IsDominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

Weight Reflect(const CartanMatrix& c, const Weight& w, int i) {
  Weight out = w;
  for (int j = 0; j < c.rank(); ++j) out[j] -= w[i] * c(i, j);
  return out;
}

Weight DominantConjugate(const CartanMatrix& c, Weight w) {
  for (;;) {
    int i = 0;
    while (i < c.rank() && w[i] >= 0) ++i;
    if (i == c.rank()) return w;
    w = Reflect(c, w, i);
  }
}

int64_t WeylDimension(const CartanMatrix& c, const Weight& lambda, int64_t cap) {
  RequireShape(c, lambda);
  if (!IsDominant(lambda)) {
    throw Error(ErrorCode::kNotDominant, "weight " + WeightString(lambda) + " is not dominant");
  }
  const RootSystem rs = PositiveRoots(c);
  Weight shifted = lambda;
  for (int& x : shifted) ++x;
  const Weight rho(c.rank(), 1);
  Rational dim = 1;
  for (const auto& alpha : rs.positive) {
    dim *= Rational(Pair(rs.symmetrizer, shifted, alpha)) / Pair(rs.symmetrizer, rho, alpha);
  }
  dim.canonicalize();
  if (dim > Rational(cap)) {
    throw Error(ErrorCode::kDimensionCapExceeded,
                "dimension " + dim.get_str() + " exceeds the cap " + std::to_string(cap));
  }
  return dim.get_num().get_si();
}

Character FreudenthalCharacter(const CartanMatrix& c, const Weight& lambda, int64_t cap) {
  WeylDimension(c, lambda, cap);
  const RootSystem rs = PositiveRoots(c);
  const auto& d = rs.symmetrizer;
  const int n = c.rank();
  std::vector<Weight> root_weights;
  for (const auto& alpha : rs.positive) root_weights.push_back(RootToWeight(c, alpha));

  // depth[w] holds the simple-root coordinates of lambda - w.
  Character ch;
  std::map<Weight, std::vector<int>> depth;
  ch.multiplicity[lambda] = 1;
  depth[lambda] = std::vector<int>(n, 0);
  std::vector<Weight> level = {lambda};
  while (!level.empty()) {
    std::set<Weight> candidates;
    for (const Weight& mu : level)
      for (int i = 0; i < n; ++i) {
        Weight nu = mu;
        for (int j = 0; j < n; ++j) nu[j] -= c(i, j);
        if (depth.count(nu)) continue;
        std::vector<int> beta = depth[mu];
        ++beta[i];
        depth.emplace(nu, beta);
        candidates.insert(nu);
      }
    std::vector<Weight> next;
    for (const Weight& nu : candidates) {
      // Weight of L(lambda) iff its dominant conjugate lies below lambda.
      Weight w = nu;
      std::vector<int> beta = depth[nu];
      bool inside = true;
      for (;;) {
        int i = 0;
        while (i < n && w[i] >= 0) ++i;
        if (i == n) break;
        beta[i] += w[i];
        if (beta[i] < 0) {
          inside = false;
          break;
        }
        w = Reflect(c, w, i);
      }
      if (!inside) continue;
      const std::vector<int>& b = depth[nu];
      int64_t denominator = -RootNorm(c, d, b);
      for (int i = 0; i < n; ++i) denominator += 2 * int64_t{b[i]} * d[i] * (lambda[i] + 1);
      int64_t numerator = 0;
      for (size_t r = 0; r < rs.positive.size(); ++r) {
        Weight up = nu;
        for (int k = 1;; ++k) {
          for (int j = 0; j < n; ++j) up[j] += root_weights[r][j];
          auto it = ch.multiplicity.find(up);
          if (it == ch.multiplicity.end()) {
            bool above = true;
            for (int j = 0; j < n; ++j) above = above && b[j] - k * rs.positive[r][j] >= 0;
            if (!above) break;
            continue;
          }
          numerator += 2 * it->second * Pair(d, up, rs.positive[r]);
        }
      }
      if (denominator <= 0 || numerator % denominator != 0) {
        throw Error(ErrorCode::kStrippingFailure,
                    "Freudenthal recursion is not integral at " + WeightString(nu));
      }
      const int64_t m = numerator / denominator;
      if (m > 0) {
        ch.multiplicity[nu] = m;
        next.push_back(nu);
      }
    }
    level = std::move(next);
  }
  return ch;
}

Weight RestrictWeight(const Weight& lambda, const FoldedAlgebraData& fold) {
  RequireShape(fold.base, lambda);
  Weight out(fold.orbits.size(), 0);
  for (size_t o = 0; o < fold.orbits.size(); ++o)
    for (int k : fold.orbits[o]) out[o] += lambda[k];
  return out;
}

std::vector<BranchTerm> Branch(const CartanMatrix& c, const Weight& lambda,
                               const FoldedAlgebraData& fold, int64_t cap, WeightPolicy policy) {
  RequireShape(c, lambda);
  if (!(c == fold.base)) throw Error(ErrorCode::kIndexMismatch, "fold was built on another Cartan matrix");
  for (const auto& orbit : fold.orbits)
    for (int k : orbit)
      if (policy == WeightPolicy::kInvariantOnly && lambda[k] != lambda[orbit.front()]) {
        throw Error(ErrorCode::kNotInvariantWeight,
                    "weight " + WeightString(lambda) + " is not constant on orbits");
      }
  const Character big = FreudenthalCharacter(c, lambda, cap);
  const CartanMatrix& small = fold.folded;
  RequireFinite(small);
  std::map<Weight, int64_t> remaining;
  for (const auto& [w, m] : big.multiplicity) remaining[RestrictWeight(w, fold)] += m;
  const RationalMatrix inverse = *small.ToRational().Inverse();

  std::vector<BranchTerm> out;
  for (;;) {
    const Weight* top = nullptr;
    Rational best;
    for (const auto& [w, m] : remaining) {
      if (m < 0) {
        throw Error(ErrorCode::kStrippingFailure, "negative multiplicity at " + WeightString(w));
      }
      if (m == 0) continue;
      const Rational h = Height(inverse, w);
      if (top == nullptr || h > best) {
        top = &w;
        best = h;
      }
    }
    if (top == nullptr) break;
    const Weight mu = *top;
    const int64_t m = remaining[mu];
    if (!IsDominant(mu)) {
      throw Error(ErrorCode::kStrippingFailure, "maximal weight " + WeightString(mu) + " is not dominant");
    }
    out.push_back({mu, m});
    for (const auto& [w, k] : FreudenthalCharacter(small, mu, cap).multiplicity) remaining[w] -= m * k;
  }
  int64_t total = 0;
  for (const auto& term : out) total += term.multiplicity * WeylDimension(small, term.weight, cap);
  if (total != big.Dimension()) {
    throw Error(ErrorCode::kStrippingFailure, "branching does not conserve dimension");
  }
  return out;
}

Weight HighestWeightFromFraming(const DimensionVector& w) { return w.values(); }

}  // namespace qfold
