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

// Dense matrices over an exact field with Gaussian-elimination kernels.
#ifndef QFOLD_MATRIX_H_
#define QFOLD_MATRIX_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfold/error.h"
#include "qfold/scalar.h"

namespace qfold {

template <typename F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, F(0)) {}
  Matrix(int rows, int cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != size_t(rows) * cols) {
      throw Error(ErrorCode::kShapeMismatch, "matrix data size does not match shape");
    }
  }

  static Matrix Zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix Identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix Scalar(int n, const F& value) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool IsSquare() const { return rows_ == cols_; }

  F& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const F& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
  const std::vector<F>& data() const { return data_; }

  bool IsZero() const {
    for (const F& x : data_) {
      if (x != F(0)) return false;
    }
    return true;
  }

  Matrix Transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    CheckSameShape(o);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    CheckSameShape(o);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (F& x : data_) x *= s;
    return *this;
  }
  Matrix operator-() const {
    Matrix out = *this;
    for (F& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::kShapeMismatch,
                  "cannot multiply " + a.ShapeString() + " by " + b.ShapeString());
    }
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik == F(0)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> RowReduce() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int pivot = -1;
      for (int r = row; r < rows_; ++r) {
        if ((*this)(r, col) != F(0)) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      SwapRows(pivot, row);
      const F inv = F(1) / (*this)(row, col);
      for (int c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (int r = 0; r < rows_; ++r) {
        if (r == row) continue;
        const F factor = (*this)(r, col);
        if (factor == F(0)) continue;
        for (int c = col; c < cols_; ++c) (*this)(r, c) -= factor * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int Rank() const {
    Matrix copy = *this;
    return static_cast<int>(copy.RowReduce().size());
  }

  // Columns form a basis of the null space (cols_ x nullity).
  Matrix Kernel() const {
    Matrix rref = *this;
    const std::vector<int> pivots = rref.RowReduce();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix basis(cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
      basis(free_cols[k], int(k)) = F(1);
      for (size_t r = 0; r < pivots.size(); ++r) {
        basis(pivots[r], int(k)) = -rref(int(r), free_cols[k]);
      }
    }
    return basis;
  }

  // Columns form a basis of the column space (rows_ x rank).
  Matrix ColumnBasis() const {
    Matrix rref = *this;
    const std::vector<int> pivots = rref.RowReduce();
    Matrix out(rows_, static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
      for (int r = 0; r < rows_; ++r) out(r, int(k)) = (*this)(r, pivots[k]);
    return out;
  }

  std::optional<Matrix> Inverse() const {
    if (!IsSquare()) return std::nullopt;
    if (rows_ == 0) return Matrix();
    Matrix aug = HStack(*this, Identity(rows_));
    const std::vector<int> pivots = aug.RowReduce();
    if (static_cast<int>(pivots.size()) < rows_ || pivots[rows_ - 1] >= rows_) {
      return std::nullopt;
    }
    return aug.Block(0, rows_, rows_, rows_);
  }

  // Some X with (*this) X = rhs, or nullopt when inconsistent.
  std::optional<Matrix> Solve(const Matrix& rhs) const {
    if (rhs.rows_ != rows_) throw Error(ErrorCode::kShapeMismatch, "solve: row mismatch");
    Matrix aug = HStack(*this, rhs);
    const std::vector<int> pivots = aug.RowReduce();
    Matrix x(cols_, rhs.cols_);
    for (size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] >= cols_) return std::nullopt;
      for (int c = 0; c < rhs.cols_; ++c) x(pivots[r], c) = aug(int(r), cols_ + c);
    }
    return x;
  }

  Matrix Block(int r0, int c0, int rows, int cols) const {
    Matrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }
  void SetBlock(int r0, int c0, const Matrix& block) {
    for (int r = 0; r < block.rows_; ++r)
      for (int c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
  }
  Matrix Column(int c) const { return Block(0, c, rows_, 1); }

  static Matrix HStack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw Error(ErrorCode::kShapeMismatch, "hstack row mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_);
    out.SetBlock(0, 0, a);
    out.SetBlock(0, a.cols_, b);
    return out;
  }
  static Matrix VStack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw Error(ErrorCode::kShapeMismatch, "vstack column mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_);
    out.SetBlock(0, 0, a);
    out.SetBlock(a.rows_, 0, b);
    return out;
  }
  static Matrix BlockDiagonal(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    out.SetBlock(0, 0, a);
    out.SetBlock(a.rows_, a.cols_, b);
    return out;
  }

  F Determinant() const {
    if (!IsSquare()) throw Error(ErrorCode::kShapeMismatch, "determinant of non-square matrix");
    Matrix m = *this;
    F det(1);
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int r = col; r < rows_; ++r) {
        if (m(r, col) != F(0)) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return F(0);
      if (pivot != col) {
        m.SwapRows(pivot, col);
        det = -det;
      }
      det *= m(col, col);
      const F inv = F(1) / m(col, col);
      for (int r = col + 1; r < rows_; ++r) {
        const F factor = m(r, col) * inv;
        if (factor == F(0)) continue;
        for (int c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
      }
    }
    return det;
  }

  Matrix Power(int e) const {
    Matrix result = Identity(rows_), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = result * base;
      base = base * base;
    }
    return result;
  }

  std::string ShapeString() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void CheckSameShape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorCode::kShapeMismatch, ShapeString() + " vs " + o.ShapeString());
    }
  }
  void SwapRows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> data_;
};

// True iff every column of `a` lies in the column span of `b`.
template <typename F>
bool ColumnSpanContained(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() == 0) return true;
  if (b.cols() == 0) return a.IsZero();
  return Matrix<F>::HStack(b, a).Rank() == b.Rank();
}

using RationalMatrix = Matrix<Rational>;

}  // namespace qfold

#endif  // QFOLD_MATRIX_H_
