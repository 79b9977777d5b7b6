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

// Eigenspaces of finite-order matrices over cyclotomic fields.
#ifndef QFOLD_EIGEN_H_
#define QFOLD_EIGEN_H_

#include <vector>

#include "qfold/matrix.h"
#include "qfold/scalar.h"

namespace qfold {

using CyclotomicMatrix = Matrix<Cyclotomic>;

CyclotomicMatrix ToCyclotomic(const RationalMatrix& m);

// Columns span ker(m - lambda I).
template <typename F>
Matrix<F> Eigenspace(const Matrix<F>& m, const F& lambda) {
  return (m - Matrix<F>::Scalar(m.rows(), lambda)).Kernel();
}

struct EigenPiece {
  int j = 0;               // eigenvalue zeta_e^j, 1 <= j <= e (j = e is 1)
  Cyclotomic eigenvalue;
  int dimension = 0;
};

// Requires g^e = I exactly, otherwise throws Error(kNotFiniteOrder).
// Returns one piece per j = 1..e; dimensions sum to the size of g.
std::vector<EigenPiece> EigenGrade(const RationalMatrix& g, int e);
std::vector<EigenPiece> EigenGrade(const CyclotomicMatrix& g, int e);

}  // namespace qfold

#endif  // QFOLD_EIGEN_H_
