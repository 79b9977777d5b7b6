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

#include <gtest/gtest.h>

#include "qfold/error.h"
#include "qfold/split_quotient.h"

namespace qfold {
namespace {

using families::A;
using families::D;

TEST(CartanTest, FromQuiver) {
  EXPECT_EQ(CartanFromQuiver(A(2)), CartanMatrix({{2, -1}, {-1, 2}}));
  EXPECT_EQ(CartanFromQuiver(families::AffineA(1)), CartanMatrix({{2, -2}, {-2, 2}}));
  const CartanMatrix d4 = CartanFromQuiver(D(4));
  EXPECT_EQ(d4.entries()[1], (std::vector<int>{-1, 2, -1, -1}));
  const Quiver loop({"1"}, {{"l", "1", "1"}});
  EXPECT_THROW(CartanFromQuiver(loop), Error);
  EXPECT_THROW(CartanMatrix({{2, 1}, {-1, 2}}), Error);
  EXPECT_THROW(CartanMatrix({{2, -1}, {0, 2}}), Error);
}

TEST(ClassifyTest, FiniteAndAffine) {
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(A(5))).ToString(), "A5");
  EXPECT_EQ(ClassifyCartan(CartanMatrix({{2, -1}, {-2, 2}})).ToString(), "C2");
  EXPECT_EQ(ClassifyCartan(CartanMatrix({{2, -2}, {-1, 2}})).ToString(), "B2");
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(families::AffineA(1))).ToString(), "affine-A1");
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(families::AffineA(4))).ToString(), "affine-A4");
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(families::AffineD(4))).ToString(), "affine-D4");
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(families::AffineD(6))).ToString(), "affine-D6");
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(D(5))).ToString(), "D5");
  EXPECT_EQ(ClassifyCartan(CartanMatrix({{2, -1}, {-3, 2}})).ToString(), "G2");
  // E6: 1-3-4-5-6 with 2 on 4.
  const Quiver e6({"1", "2", "3", "4", "5", "6"},
                  {{"a", "1", "3"}, {"b", "3", "4"}, {"c", "4", "5"}, {"d", "5", "6"},
                   {"e", "2", "4"}});
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(e6)).ToString(), "E6");
  // Star with four legs of length two is wild.
  EXPECT_EQ(ClassifyCartan(CartanMatrix({{2, -3}, {-3, 2}})).family, Family::kOther);
}

// Oracle: the determinant of a finite Cartan matrix is fixed by its type
// (A_n: n+1, B_n = C_n: 2, D_n: 4) while the leaf of the double bond tells B
// from C.
TEST(ClassifyTest, DeterminantOracleOnFoldedFamilies) {
  for (int n = 2; n <= 5; ++n) {
    const Quiver a = A(2 * n - 1);
    const CartanMatrix folded = FoldCartan(CartanFromQuiver(a), families::AFlip(a).vertex_perm()).folded;
    EXPECT_EQ(folded.ToRational().Determinant(), Rational(2));
    EXPECT_EQ(ClassifyCartan(folded), (TypeLabel{Family::kC, n}));
    const Quiver d = D(n + 1);
    const CartanMatrix fd = FoldCartan(CartanFromQuiver(d), families::DForkSwap(d).vertex_perm()).folded;
    EXPECT_EQ(fd.ToRational().Determinant(), Rational(2));
    EXPECT_EQ(ClassifyCartan(fd), (TypeLabel{Family::kB, n}));
  }
}

TEST(FoldTest, A3FlipGivesC2) {
  const Quiver a3 = A(3);
  const FoldedAlgebraData f = FoldCartan(CartanFromQuiver(a3), families::AFlip(a3).vertex_perm());
  EXPECT_EQ(f.orbits, (std::vector<std::vector<int>>{{0, 2}, {1}}));
  EXPECT_EQ(f.folded, CartanMatrix({{2, -1}, {-2, 2}}));
  EXPECT_EQ(ClassifyCartan(f.folded).ToString(), "C2");
}

TEST(FoldTest, IdentityAndErrors) {
  const CartanMatrix d5 = CartanFromQuiver(D(5));
  EXPECT_EQ(FoldCartan(d5, {0, 1, 2, 3, 4}).folded, d5);
  const Quiver a4 = A(4);
  EXPECT_THROW(FoldCartan(CartanFromQuiver(a4), {3, 2, 1, 0}), Error);
  EXPECT_THROW(FoldCartan(d5, {1, 0, 2, 3, 4}), Error);
}

TEST(FoldTest, FoldedMatricesAreSymmetrizable) {
  for (int n = 2; n <= 6; ++n) {
    const Quiver a = A(2 * n - 1);
    const CartanMatrix f = FoldCartan(CartanFromQuiver(a), families::AFlip(a).vertex_perm()).folded;
    const auto d = Symmetrizer(f);
    ASSERT_TRUE(d.has_value());
    for (int i = 0; i < f.rank(); ++i) {
      EXPECT_GT((*d)[i], 0);
      for (int j = 0; j < f.rank(); ++j) EXPECT_EQ(f(i, j) * (*d)[j], f(j, i) * (*d)[i]);
    }
  }
}

TEST(FoldTest, SplitThenFoldCorrespondence) {
  for (int n = 2; n <= 5; ++n) {
    const Quiver d = D(n + 1);
    const SplitData sd = SplitQuiver(d, families::DForkSwap(d));
    const CartanMatrix cs = CartanFromQuiver(sd.split);
    EXPECT_EQ(ClassifyCartan(cs), (TypeLabel{Family::kA, 2 * n - 1}));
    EXPECT_EQ(ClassifyCartan(FoldCartan(cs, sd.induced.vertex_perm()).folded),
              (TypeLabel{Family::kC, n}));
    const Quiver a = A(2 * n - 1);
    const SplitData sa = SplitQuiver(a, families::AFlip(a));
    const CartanMatrix ca = CartanFromQuiver(sa.split);
    EXPECT_EQ(ClassifyCartan(ca), (TypeLabel{n == 2 ? Family::kA : Family::kD, n == 2 ? 3 : n + 1}));
    EXPECT_EQ(ClassifyCartan(FoldCartan(ca, sa.induced.vertex_perm()).folded),
              (TypeLabel{Family::kB, n}));
  }
}

TEST(GeneratorTest, A3FlipSums) {
  const Generators g = FoldedGenerators(3, DefiningFamily::kA, {2, 1, 0});
  ASSERT_EQ(g.e.size(), 2u);
  RationalMatrix e13(4, 4), e2(4, 4);
  e13(0, 1) = 1;
  e13(2, 3) = 1;
  e2(1, 2) = 1;
  EXPECT_EQ(g.e[0], e13);
  EXPECT_EQ(g.e[1], e2);
  EXPECT_EQ(FoldedGenerators(5, DefiningFamily::kA, {4, 3, 2, 1, 0}).e.size(), 3u);
  EXPECT_THROW(FoldedGenerators(2, DefiningFamily::kD, {0, 1}), Error);
}

TEST(SerreTest, PinsTheConvention) {
  const Generators sl2 = FoldedGenerators(1, DefiningFamily::kA, {0});
  EXPECT_TRUE(SerreCheck(CartanMatrix(std::vector<std::vector<int>>{{2}}), sl2).ok);
  const Quiver a3 = A(3);
  const auto perm = families::AFlip(a3).vertex_perm();
  const Generators g = FoldedGenerators(3, DefiningFamily::kA, perm);
  const CartanMatrix folded = FoldCartan(CartanFromQuiver(a3), perm).folded;
  EXPECT_TRUE(SerreCheck(folded, g).ok) << SerreCheck(folded, g).violation;
  const SerreResult wrong = SerreCheck(folded.Transpose(), g);
  EXPECT_FALSE(wrong.ok);
  EXPECT_FALSE(wrong.violation.empty());
  EXPECT_THROW(SerreCheck(CartanFromQuiver(A(3)), g), Error);
}

TEST(SerreTest, AllSmallFamilies) {
  for (int n = 1; n <= 7; ++n) {
    const Quiver a = A(n);
    const auto perm = families::AFlip(a).vertex_perm();
    const CartanMatrix c = CartanFromQuiver(a);
    if (n % 2 == 1) {
      const SerreResult r =
          SerreCheck(FoldCartan(c, perm).folded, FoldedGenerators(n, DefiningFamily::kA, perm));
      EXPECT_TRUE(r.ok) << "A" << n << ": " << r.violation;
    }
    const auto id = DiagramAutomorphism::Identity(a).vertex_perm();
    EXPECT_TRUE(SerreCheck(c, FoldedGenerators(n, DefiningFamily::kA, id)).ok);
  }
  for (int n = 3; n <= 5; ++n) {
    const Quiver d = D(n);
    const auto perm = families::DForkSwap(d).vertex_perm();
    const SerreResult r = SerreCheck(FoldCartan(CartanFromQuiver(d), perm).folded,
                                     FoldedGenerators(n, DefiningFamily::kD, perm));
    EXPECT_TRUE(r.ok) << "D" << n << ": " << r.violation;
  }
}

}  // namespace
}  // namespace qfold
