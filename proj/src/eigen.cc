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

#include "qfold/eigen.h"

#include "qfold/error.h"

namespace qfold {

CyclotomicMatrix ToCyclotomic(const RationalMatrix& m) {
  CyclotomicMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = Cyclotomic(m(r, c));
  return out;
}

std::vector<EigenPiece> EigenGrade(const CyclotomicMatrix& g, int e) {
  if (e < 1 || !g.IsSquare()) {
    throw Error(ErrorCode::kNotFiniteOrder, "need a square matrix and a positive order");
  }
  if (g.Power(e) != CyclotomicMatrix::Identity(g.rows())) {
    throw Error(ErrorCode::kNotFiniteOrder,
                "matrix does not satisfy g^" + std::to_string(e) + " = id");
  }
  std::vector<EigenPiece> pieces;
  int total = 0;
  for (int j = 1; j <= e; ++j) {
    EigenPiece piece;
    piece.j = j;
    piece.eigenvalue = Cyclotomic::RootOfUnity(e, j);
    piece.dimension = Eigenspace(g, piece.eigenvalue).cols();
    total += piece.dimension;
    pieces.push_back(piece);
  }
  if (total != g.rows()) {
    throw Error(ErrorCode::kNotDiagonalizable, "eigenspaces do not fill the space");
  }
  return pieces;
}

std::vector<EigenPiece> EigenGrade(const RationalMatrix& g, int e) {
  return EigenGrade(ToCyclotomic(g), e);
}

}  // namespace qfold
