// src/capacity.cc

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

#include "udec/capacity.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "udec/decodability.h"
#include "udec/errors.h"

namespace udec {

namespace {

void CheckDurations(const std::vector<double>& durations,
                    const std::string& where) {
  if (durations.empty()) throw InputError(where + ": no symbol durations");
  for (double t : durations)
    if (!std::isfinite(t) || t <= 0.0)
      throw InputError(where + ": duration " + std::to_string(t) +
                       " is not a positive finite number");
}

// Bisection for a strictly decreasing g on [lo, hi] with g(lo) > 0 >= g(hi).
// Returns whichever of the final lo, mid, hi has the smallest |g|, so an
// endpoint that is an exact root is returned exactly.
template <typename F>
double BisectDecreasing(F g, double lo, double hi, double tol) {
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double best = hi;
  double best_residual = std::abs(g(hi));
  for (double x : {0.5 * (lo + hi), lo}) {
    const double r = std::abs(g(x));
    if (r < best_residual) {
      best = x;
      best_residual = r;
    }
  }
  return best;
}

bool IsInteger(double x) { return std::floor(x) == x; }

}  // namespace

CapacityResult UnconstrainedCapacity(const UnconstrainedChannel& channel,
                                     double tol) {
  CheckDurations(channel.durations, "unconstrained channel");
  const auto& t = channel.durations;
  auto excess = [&](double x) {
    double sum = 0.0;
    for (double ti : t) sum += std::pow(x, -ti);
    return sum - 1.0;
  };
  CapacityResult r;
  if (t.size() == 1) return r;  // sum < 1 for every X > 1: X0 = 1

  const double t_min = *std::min_element(t.begin(), t.end());
  // At X = m^{1/t_min} every term is at most 1/m.
  double hi = std::max(2.0, std::pow(static_cast<double>(t.size()), 1.0 / t_min));
  while (excess(hi) > 0.0) hi *= 2.0;
  r.root = BisectDecreasing(excess, 1.0, hi, tol);
  r.capacity_bits = std::log2(r.root);
  return r;
}

Matrix ChannelMatrix(const FiniteStateChannel& channel, double w) {
  const std::size_t n = channel.states.size();
  Matrix q(n, n);
  for (const auto& tr : channel.transitions)
    for (double b : tr.durations) q(tr.from, tr.to) += std::pow(w, -b);
  return q;
}

CapacityResult FiniteStateCapacity(const FiniteStateChannel& channel,
                                   double tol) {
  const std::size_t n = channel.states.size();
  if (channel.transitions.empty())
    throw InputError("finite-state channel has no transitions");
  std::vector<bool> incident(n, false);
  double b_min = std::numeric_limits<double>::infinity();
  bool integer_durations = true;
  for (const auto& tr : channel.transitions) {
    if (tr.from < 0 || tr.to < 0 || static_cast<std::size_t>(tr.from) >= n ||
        static_cast<std::size_t>(tr.to) >= n)
      throw InputError("transition " + std::to_string(tr.from) + "->" +
                       std::to_string(tr.to) + " names an unknown state");
    CheckDurations(tr.durations, "transition " + channel.states[tr.from] +
                                     "->" + channel.states[tr.to]);
    incident[tr.from] = incident[tr.to] = true;
    for (double b : tr.durations) {
      b_min = std::min(b_min, b);
      integer_durations = integer_durations && IsInteger(b);
    }
  }
  const Matrix counts = ChannelMatrix(channel, 1.0);
  if (!SupportGraph(counts).IsStronglyConnected(incident))
    throw ReducibleError(
        "finite-state channel graph is not strongly connected");

  const double rho_tol = std::max(0.1 * tol, 1e-14);
  auto excess = [&](double w) {
    return SpectralRadius(ChannelMatrix(channel, w), rho_tol) - 1.0;
  };

  CapacityResult r;
  if (excess(1.0) > rho_tol) {
    double max_row = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (double x : counts.row(i)) row += x;
      max_row = std::max(max_row, row);
    }
    // Row sums of Q(W), hence rho, are at most max_row * W^{-b_min}.
    double hi = std::max(2.0, std::pow(max_row, 1.0 / b_min));
    while (excess(hi) > 0.0) hi *= 2.0;
    r.root = BisectDecreasing(excess, 1.0, hi, tol);
  }
  r.capacity_bits = std::log2(r.root);
  if (integer_durations) {
    Matrix m = ChannelMatrix(channel, r.root);
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= 1.0;
    r.determinant_residual = std::abs(Determinant(m));
  }
  return r;
}

CapacityResult Capacity(const ChannelSpec& channel, double tol) {
  if (const auto* u = std::get_if<UnconstrainedChannel>(&channel))
    return UnconstrainedCapacity(*u, tol);
  return FiniteStateCapacity(std::get<FiniteStateChannel>(channel), tol);
}

FiniteStateChannel CompatibilityChannel(const MooreMarkovSource& source,
                                        const Codebook& code) {
  const auto lengths = code.LengthsFor(source.alphabet());
  FiniteStateChannel ch;
  ch.states = source.alphabet().symbols();
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (source.transition()(i, j) > 0.0)
        ch.transitions.push_back({static_cast<int>(i), static_cast<int>(j),
                                  {static_cast<double>(lengths[j])}});
  return ch;
}

EquivalenceCheck VerifyMcMillanCapacityEquivalence(
    const MooreMarkovSource& source, const Codebook& code) {
  if (!IsIrreducible(source))
    throw ReducibleError("equivalence check needs an irreducible source");
  EquivalenceCheck out;
  out.rho = SpectralRadius(BuildQMoore(source, code));
  out.capacity =
      FiniteStateCapacity(CompatibilityChannel(source, code)).capacity_bits;
  const bool kraft_type = out.rho <= 1.0 + kNecessaryConditionSlack;
  const bool bounded =
      out.capacity <= std::log2(static_cast<double>(code.radix())) +
                          kNecessaryConditionSlack;
  out.consistent = kraft_type == bounded;
  return out;
}

}  // namespace udec
