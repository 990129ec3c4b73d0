// src/matrix.cc

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

#include "udec/matrix.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "udec/errors.h"

namespace udec {

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows[0].size();
  Matrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m)
      throw InputError("matrix row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(m));
    for (std::size_t j = 0; j < m; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  return out;
}

std::vector<double> LeftMultiply(std::span<const double> x, const Matrix& m) {
  std::vector<double> y(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

std::vector<double> RightMultiply(const Matrix& m, std::span<const double> x) {
  std::vector<double> y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double Determinant(Matrix m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(pivot, k))) pivot = i;
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

SupportGraph::SupportGraph(const Matrix& m) : adjacency_(m.rows()) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) > 0.0) adjacency_[i].push_back(static_cast<int>(j));
}

bool SupportGraph::HasEdge(int from, int to) const {
  const auto& succ = adjacency_[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<bool> SupportGraph::ReachableFrom(
    std::span<const int> sources) const {
  std::vector<bool> seen(size(), false);
  std::vector<int> stack;
  for (int s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<std::vector<int>> SupportGraph::StronglyConnectedComponents()
    const {
  const int n = static_cast<int>(size());
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adjacency_[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return components;
}

bool SupportGraph::IsStronglyConnected(const std::vector<bool>& mask) const {
  int first = -1;
  std::size_t count = 0;
  for (std::size_t v = 0; v < size(); ++v) {
    if (mask[v]) {
      if (first < 0) first = static_cast<int>(v);
      ++count;
    }
  }
  if (first < 0) return false;
  // Forward and backward reachability inside the mask.
  auto reach = [&](bool reverse) {
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{first};
    seen[first] = true;
    std::size_t hits = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < size(); ++w) {
        if (!mask[w] || seen[w]) continue;
        const bool edge = reverse ? HasEdge(static_cast<int>(w), v)
                                  : HasEdge(v, static_cast<int>(w));
        if (edge) {
          seen[w] = true;
          ++hits;
          stack.push_back(static_cast<int>(w));
        }
      }
    }
    return hits;
  };
  return reach(false) == count && reach(true) == count;
}

bool SupportGraph::IsStronglyConnected() const {
  return IsStronglyConnected(std::vector<bool>(size(), true));
}

}  // namespace udec
