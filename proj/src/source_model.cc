// src/source_model.cc

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

#include "udec/source_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "udec/errors.h"

namespace udec {

std::string ValidationReport::ToString() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i > 0) os << "; ";
    os << problems[i];
  }
  return os.str();
}

MooreMarkovSource::MooreMarkovSource(Alphabet alphabet, Matrix transition,
                                     std::vector<double> initial)
    : alphabet_(std::move(alphabet)),
      transition_(std::move(transition)),
      initial_(std::move(initial)) {
  const std::size_t m = alphabet_.size();
  if (transition_.rows() != m || transition_.cols() != m)
    throw InputError("transition matrix is " +
                     std::to_string(transition_.rows()) + "x" +
                     std::to_string(transition_.cols()) + " but the alphabet has " +
                     std::to_string(m) + " symbols");
  if (initial_.size() != m)
    throw InputError("initial distribution has " +
                     std::to_string(initial_.size()) +
                     " entries but the alphabet has " + std::to_string(m) +
                     " symbols");
}

std::vector<int> MooreMarkovSource::InitialSupport() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < initial_.size(); ++i)
    if (initial_[i] > 0.0) out.push_back(static_cast<int>(i));
  return out;
}

MealySource::MealySource(
    std::vector<std::string> states, Alphabet alphabet,
    std::vector<std::vector<std::vector<std::string>>> outputs,
    std::vector<std::string> initial_states)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      outputs_(std::move(outputs)),
      initial_states_(std::move(initial_states)) {
  const std::size_t q = states_.size();
  bool shape_ok = outputs_.size() == q;
  for (const auto& row : outputs_) shape_ok = shape_ok && row.size() == q;
  if (!shape_ok)
    throw InputError("Mealy outputs must be a " + std::to_string(q) + "x" +
                     std::to_string(q) + " table");
}

std::vector<int> MealySource::InitialStateIndices() const {
  std::vector<int> out;
  for (const auto& name : initial_states_) {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it != states_.end())
      out.push_back(static_cast<int>(it - states_.begin()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool IsProbability(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

}  // namespace

ValidationReport Validate(const MooreMarkovSource& source) {
  ValidationReport report;
  const std::size_t m = source.size();
  if (m == 0) report.problems.push_back("alphabet is empty");
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double p = source.transition()(i, j);
      if (!IsProbability(p))
        report.problems.push_back("transition[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "] = " +
                                  std::to_string(p) + " is not in [0,1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "transition row " << i << " sums to " << sum;
      report.problems.push_back(os.str());
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < source.initial().size(); ++i) {
    const double p = source.initial()[i];
    if (!IsProbability(p))
      report.problems.push_back("initial[" + std::to_string(i) + "] = " +
                                std::to_string(p) + " is not in [0,1]");
    total += p;
  }
  if (m > 0 && std::abs(total - 1.0) > kStochasticTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "initial distribution sums to " << total;
    report.problems.push_back(os.str());
  }
  return report;
}

ValidationReport Validate(const MealySource& source) {
  ValidationReport report;
  const auto& states = source.states();
  std::set<std::string> seen_states;
  for (const auto& s : states)
    if (!seen_states.insert(s).second)
      report.problems.push_back("duplicate state '" + s + "'");
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      std::set<std::string> seen;
      for (const auto& sym : source.outputs(i, j)) {
        const std::string where =
            "transition " + states[i] + "->" + states[j];
        if (!source.alphabet().Contains(sym))
          report.problems.push_back(where + ": symbol '" + sym +
                                    "' is not in the alphabet");
        if (!seen.insert(sym).second)
          report.problems.push_back(where + ": symbol '" + sym +
                                    "' listed twice");
      }
    }
  }
  if (source.initial_states().empty())
    report.problems.push_back("no initial state");
  for (const auto& name : source.initial_states())
    if (!seen_states.count(name))
      report.problems.push_back("initial state '" + name + "' is not a state");
  return report;
}

void ValidateOrThrow(const MooreMarkovSource& source) {
  auto report = Validate(source);
  if (!report.ok()) throw InputError("invalid source: " + report.ToString());
}

void ValidateOrThrow(const MealySource& source) {
  auto report = Validate(source);
  if (!report.ok())
    throw InputError("invalid Mealy source: " + report.ToString());
}

MealySource ToMealy(const MooreMarkovSource& source) {
  const std::size_t m = source.size();
  const auto& names = source.alphabet().symbols();
  std::vector<std::vector<std::vector<std::string>>> outputs(
      m, std::vector<std::vector<std::string>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (source.CanFollow(static_cast<SymbolId>(i), static_cast<SymbolId>(j)))
        outputs[i][j] = {names[j]};
  std::vector<std::string> initial;
  for (int s : source.InitialSupport()) initial.push_back(names[s]);
  return MealySource(names, source.alphabet(), std::move(outputs),
                     std::move(initial));
}

bool IsProducible(const MooreMarkovSource& source,
                  std::span<const SymbolId> seq) {
  if (seq.empty()) return true;
  for (SymbolId s : seq)
    if (s < 0 || static_cast<std::size_t>(s) >= source.size())
      throw InputError("symbol index " + std::to_string(s) +
                       " is outside the alphabet");
  if (!source.CanStart(seq[0])) return false;
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (!source.CanFollow(seq[k - 1], seq[k])) return false;
  return true;
}

bool IsProducible(const MooreMarkovSource& source,
                  std::span<const std::string> names) {
  const SymbolSequence seq = source.alphabet().FromNames(names);
  return IsProducible(source, seq);
}

bool IsConstrained(const MooreMarkovSource& source) {
  const std::size_t m = source.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (source.initial()[i] <= 0.0) return true;
    for (std::size_t j = 0; j < m; ++j)
      if (source.transition()(i, j) <= 0.0) return true;
  }
  return false;
}

bool IsIrreducible(const MooreMarkovSource& source) {
  return source.size() > 0 &&
         SupportGraph(source.transition()).IsStronglyConnected();
}

std::vector<double> StationaryDistribution(const MooreMarkovSource& source,
                                           double tol,
                                           std::size_t max_iterations) {
  if (!IsIrreducible(source))
    throw ReducibleError(
        "transition matrix is reducible: no unique stationary distribution");
  const std::size_t m = source.size();
  const Matrix& p = source.transition();
  std::vector<double> pi(m, 1.0 / static_cast<double>(m));
  auto residual = [&](const std::vector<double>& x) {
    const auto y = LeftMultiply(x, p);
    double r = 0.0;
    for (std::size_t j = 0; j < m; ++j) r = std::max(r, std::abs(y[j] - x[j]));
    return r;
  };
  for (std::size_t it = 0; it < max_iterations; ++it) {
    if (residual(pi) <= tol) return pi;
    auto next = LeftMultiply(pi, p);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      next[j] = 0.5 * (next[j] + pi[j]);
      sum += next[j];
    }
    for (double& x : next) x /= sum;
    pi = std::move(next);
  }
  throw ConvergenceError("stationary distribution did not converge in " +
                         std::to_string(max_iterations) +
                         " iterations (residual " +
                         std::to_string(residual(pi)) + ")");
}

std::vector<std::vector<double>> ForwardMarginals(
    const MooreMarkovSource& source, std::size_t n) {
  std::vector<std::vector<double>> out;
  out.reserve(n);
  if (n == 0) return out;
  out.push_back(source.initial());
  for (std::size_t k = 1; k < n; ++k)
    out.push_back(LeftMultiply(out.back(), source.transition()));
  return out;
}

double Entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double JointEntropy(const MooreMarkovSource& source, std::size_t n) {
  if (n == 0) return 0.0;
  const std::size_t m = source.size();
  std::vector<double> row_entropy(m);
  for (std::size_t x = 0; x < m; ++x)
    row_entropy[x] = Entropy(source.transition().row(x));

  double h = Entropy(source.initial());
  std::vector<double> marginal = source.initial();
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t x = 0; x < m; ++x) h += marginal[x] * row_entropy[x];
    marginal = LeftMultiply(marginal, source.transition());
  }
  return h;
}

double EntropyRate(const MooreMarkovSource& source) {
  const auto pi = StationaryDistribution(source);
  double h = 0.0;
  for (std::size_t x = 0; x < source.size(); ++x)
    h += pi[x] * Entropy(source.transition().row(x));
  return h;
}

namespace {

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double UnitUniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse CDF restricted to the positive entries, so rounding in the
// cumulative sum can never select an impossible symbol.
SymbolId DrawFrom(std::span<const double> probs, double u) {
  double cumulative = 0.0;
  SymbolId last_positive = -1;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = static_cast<SymbolId>(i);
    cumulative += probs[i];
    if (u < cumulative) return last_positive;
  }
  return last_positive;
}

}  // namespace

SymbolSequence Sample(const MooreMarkovSource& source, std::size_t n,
                      std::uint64_t seed) {
  SymbolSequence seq;
  seq.reserve(n);
  if (n == 0) return seq;
  std::mt19937_64 rng(seed);
  seq.push_back(DrawFrom(source.initial(), UnitUniform(rng)));
  for (std::size_t k = 1; k < n; ++k)
    seq.push_back(
        DrawFrom(source.transition().row(seq.back()), UnitUniform(rng)));
  return seq;
}

std::uint64_t CountProducible(const MooreMarkovSource& source, std::size_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (n == 0) return 1;
  const std::size_t m = source.size();
  auto add = [](std::uint64_t a, std::uint64_t b) {
    return a > kMax - b ? kMax : a + b;
  };
  std::vector<std::uint64_t> count(m, 0);
  for (std::size_t s = 0; s < m; ++s)
    count[s] = source.CanStart(static_cast<SymbolId>(s)) ? 1 : 0;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::uint64_t> next(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (count[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (source.CanFollow(static_cast<SymbolId>(i),
                             static_cast<SymbolId>(j)))
          next[j] = add(next[j], count[i]);
    }
    count = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : count) total = add(total, c);
  return total;
}

std::vector<SymbolSequence> EnumerateProducible(
    const MooreMarkovSource& source, std::size_t n, std::size_t guard) {
  const std::uint64_t total = CountProducible(source, n);
  if (total > guard)
    throw GuardExceeded("enumerating " + std::to_string(total) +
                        " sequences of length " + std::to_string(n) +
                        " exceeds the guard of " + std::to_string(guard));
  std::vector<SymbolSequence> out;
  out.reserve(static_cast<std::size_t>(total));
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const std::size_t m = source.size();
  SymbolSequence current;
  current.reserve(n);
  // Depth-first in symbol order yields lexicographic output.
  auto extend = [&](auto&& self) -> void {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t s = 0; s < m; ++s) {
      const auto sym = static_cast<SymbolId>(s);
      const bool ok = current.empty() ? source.CanStart(sym)
                                      : source.CanFollow(current.back(), sym);
      if (!ok) continue;
      current.push_back(sym);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace udec
