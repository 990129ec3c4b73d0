// src/q_matrix.cc

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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "udec/decodability.h"

namespace udec {

namespace {

double InversePower(int radix, std::size_t length) {
  return std::pow(static_cast<double>(radix), -static_cast<double>(length));
}

Matrix Submatrix(const Matrix& q, const std::vector<int>& keep) {
  Matrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out(i, j) = q(keep[i], keep[j]);
  return out;
}

// rho of an irreducible nonnegative matrix with at least two rows.
double IrreducibleSpectralRadius(const Matrix& a, double tol,
                                 std::size_t max_iterations) {
  const std::size_t n = a.rows();
  std::vector<double> x(n, 1.0);
  double lo = 0.0, hi = 0.0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::vector<double> y = RightMultiply(a, x);
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];  // shift by the identity
      const double ratio = y[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      top = std::max(top, y[i]);
    }
    if (hi - lo <= tol) return 0.5 * (lo + hi) - 1.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
  }
  std::ostringstream os;
  os.precision(17);
  os << "spectral radius did not converge in " << max_iterations
     << " iterations; bracket [" << lo - 1.0 << ", " << hi - 1.0 << "]";
  throw ConvergenceError(os.str());
}

}  // namespace

QMatrix BuildQMoore(const MooreMarkovSource& source, const Codebook& code) {
  const std::size_t m = source.size();
  const auto lengths = code.LengthsFor(source.alphabet());
  QMatrix q;
  q.entries = Matrix(m, m);
  q.radix = code.radix();
  q.form = QMatrix::Form::kMoore;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (source.transition()(i, j) > 0.0)
        q.entries(i, j) = InversePower(code.radix(), lengths[j]);
  return q;
}

QMatrix BuildQMealy(const MealySource& source, const Codebook& code) {
  const std::size_t n = source.num_states();
  QMatrix q;
  q.entries = Matrix(n, n);
  q.radix = code.radix();
  q.form = QMatrix::Form::kMealy;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& sym : source.outputs(i, j))
        q.entries(i, j) += InversePower(code.radix(), code.WordFor(sym).size());
  return q;
}

double SpectralRadius(const Matrix& q, double tol,
                      std::size_t max_iterations) {
  if (!q.square()) throw InputError("spectral radius of a non-square matrix");
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (!std::isfinite(q(i, j)) || q(i, j) < 0.0)
        throw InputError("spectral radius needs a nonnegative matrix; entry (" +
                         std::to_string(i) + "," + std::to_string(j) +
                         ") = " + std::to_string(q(i, j)));
  // rho(Q) is the largest rho over the diagonal blocks of the SCC ordering.
  double rho = 0.0;
  for (const auto& comp : SupportGraph(q).StronglyConnectedComponents()) {
    if (comp.size() == 1) {
      rho = std::max(rho, q(comp[0], comp[0]));
      continue;
    }
    rho = std::max(rho, IrreducibleSpectralRadius(Submatrix(q, comp), tol,
                                                  max_iterations));
  }
  return rho;
}

namespace {

NecessaryConditionResult CheckReachable(const Matrix& q,
                                        const std::vector<int>& starts) {
  const auto reachable = SupportGraph(q).ReachableFrom(starts);
  std::vector<int> keep;
  for (std::size_t i = 0; i < reachable.size(); ++i)
    if (reachable[i]) keep.push_back(static_cast<int>(i));
  NecessaryConditionResult r;
  r.rho = SpectralRadius(Submatrix(q, keep));
  r.passes = r.rho <= 1.0 + kNecessaryConditionSlack;
  return r;
}

}  // namespace

NecessaryConditionResult CheckNecessaryCondition(
    const MooreMarkovSource& source, const Codebook& code) {
  return CheckReachable(BuildQMoore(source, code).entries,
                        source.InitialSupport());
}

NecessaryConditionResult CheckNecessaryCondition(const MealySource& source,
                                                 const Codebook& code) {
  return CheckReachable(BuildQMealy(source, code).entries,
                        source.InitialStateIndices());
}

}  // namespace udec
