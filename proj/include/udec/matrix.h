// include/udec/matrix.h

// Copyright 2026 The udec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UDEC_MATRIX_H_
#define UDEC_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace udec {

/// Small dense row-major matrix of doubles.  The matrices in this library
/// are indexed by alphabet symbols or source states, so they stay tiny.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Throws InputError on ragged rows.
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);
  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<std::vector<double>> ToRows() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Row vector times matrix, x' M.
std::vector<double> LeftMultiply(std::span<const double> x, const Matrix& m);
/// Matrix times column vector, M x.
std::vector<double> RightMultiply(const Matrix& m, std::span<const double> x);

/// Determinant by Gaussian elimination with partial pivoting.
double Determinant(Matrix m);

/// Adjacency structure of the strictly positive entries of a square matrix.
class SupportGraph {
 public:
  explicit SupportGraph(const Matrix& m);

  std::size_t size() const { return adjacency_.size(); }
  const std::vector<int>& successors(int v) const { return adjacency_[v]; }
  bool HasEdge(int from, int to) const;

  /// Vertices reachable from `sources` (the sources included).
  std::vector<bool> ReachableFrom(std::span<const int> sources) const;

  /// Strongly connected components in reverse topological order (Tarjan).
  std::vector<std::vector<int>> StronglyConnectedComponents() const;

  /// True iff the vertices selected by `mask` form one strongly connected
  /// component of the subgraph they induce.  An empty selection is not.
  bool IsStronglyConnected(const std::vector<bool>& mask) const;
  bool IsStronglyConnected() const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace udec

#endif  // UDEC_MATRIX_H_
