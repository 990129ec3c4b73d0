// include/udec/source_model.h

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

#ifndef UDEC_SOURCE_MODEL_H_
#define UDEC_SOURCE_MODEL_H_

// Constrained information sources.
//
// A Moore source emits one symbol per state: the state is the last symbol,
// P(i, j) is the probability that symbol j follows symbol i, and the first
// symbol is drawn from the initial distribution.  A source is "constrained"
// when some finite symbol sequence can never be emitted; for a first-order
// Moore source that happens exactly when an initial probability or a
// transition probability is zero.
//
// A Mealy source emits symbols on transitions between abstract states and
// carries only the support structure (which symbols are possible on which
// transition), which is all the decodability bounds need.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "udec/alphabet.h"
#include "udec/matrix.h"

namespace udec {

/// Tolerance on row sums and on the initial distribution's total.
inline constexpr double kStochasticTolerance = 1e-12;

/// Default cap on the number of sequences an enumeration may produce.
inline constexpr std::size_t kEnumerationGuard = 10'000'000;

/// Outcome of a validity check; `problems` names each violated invariant.
struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string ToString() const;
};

class MooreMarkovSource {
 public:
  MooreMarkovSource() = default;
  /// Stores the data as given; call Validate() (or ValidateOrThrow()) to
  /// check stochasticity.  Throws InputError only on shape mismatches.
  MooreMarkovSource(Alphabet alphabet, Matrix transition,
                    std::vector<double> initial);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  const Matrix& transition() const { return transition_; }
  const std::vector<double>& initial() const { return initial_; }

  double p(SymbolId from, SymbolId to) const { return transition_(from, to); }
  bool CanStart(SymbolId s) const { return initial_[s] > 0.0; }
  bool CanFollow(SymbolId from, SymbolId to) const {
    return transition_(from, to) > 0.0;
  }
  /// Symbols with positive initial probability.
  std::vector<int> InitialSupport() const;

 private:
  Alphabet alphabet_;
  Matrix transition_;
  std::vector<double> initial_;
};

/// Finite-state source emitting symbols on transitions.
class MealySource {
 public:
  /// outputs[i][j] lists the symbol names emitted on the transition from
  /// state i to state j; an empty list means the transition is impossible.
  MealySource(std::vector<std::string> states, Alphabet alphabet,
              std::vector<std::vector<std::vector<std::string>>> outputs,
              std::vector<std::string> initial_states);

  const std::vector<std::string>& states() const { return states_; }
  std::size_t num_states() const { return states_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& outputs(std::size_t from,
                                          std::size_t to) const {
    return outputs_[from][to];
  }
  const std::vector<std::string>& initial_states() const {
    return initial_states_;
  }
  /// Indices of the initial states that name a known state.
  std::vector<int> InitialStateIndices() const;

 private:
  std::vector<std::string> states_;
  Alphabet alphabet_;
  std::vector<std::vector<std::vector<std::string>>> outputs_;
  std::vector<std::string> initial_states_;
};

ValidationReport Validate(const MooreMarkovSource& source);
ValidationReport Validate(const MealySource& source);
/// Throws InputError carrying the report when validation fails.
void ValidateOrThrow(const MooreMarkovSource& source);
void ValidateOrThrow(const MealySource& source);

/// Mealy form of a Moore source: one state per symbol, and the transition
/// i -> j emits {j} exactly when P(i, j) > 0.  Initial states are the
/// symbols with positive initial probability.
MealySource ToMealy(const MooreMarkovSource& source);

/// True iff the sequence has positive probability, initial law included.
/// The empty sequence is producible.
bool IsProducible(const MooreMarkovSource& source,
                  std::span<const SymbolId> seq);
/// Same, by symbol name; throws InputError on an unknown symbol.
bool IsProducible(const MooreMarkovSource& source,
                  std::span<const std::string> names);

/// True iff some length-1 or length-2 sequence is impossible, which for a
/// first-order source is equivalent to some finite sequence being impossible.
bool IsConstrained(const MooreMarkovSource& source);

/// True iff the positive-entry digraph of P is strongly connected.
bool IsIrreducible(const MooreMarkovSource& source);

/// Stationary distribution pi with ||pi P - pi||_inf <= tol.  Uses power
/// iteration on the lazy chain (I + P) / 2, which has the same stationary
/// law but no periodicity.  Throws ReducibleError when P is reducible and
/// ConvergenceError after `max_iterations`.
std::vector<double> StationaryDistribution(const MooreMarkovSource& source,
                                           double tol = 1e-12,
                                           std::size_t max_iterations =
                                               1'000'000);

/// Forward marginals p_1 = mu, p_k = p_{k-1} P, for k = 1..n.
std::vector<std::vector<double>> ForwardMarginals(
    const MooreMarkovSource& source, std::size_t n);

/// Shannon entropy of a probability vector in bits; 0 log(1/0) = 0.
double Entropy(std::span<const double> p);

/// H(X_1, ..., X_n) in bits by the chain rule over the forward marginals, so
/// non-stationary initial laws are handled exactly.  n = 0 gives 0.
double JointEntropy(const MooreMarkovSource& source, std::size_t n);

/// sum_x pi(x) H(P(x, .)), bits per symbol.  Throws ReducibleError.
double EntropyRate(const MooreMarkovSource& source);

/// Draws a length-n sequence by inverse-CDF sampling, deterministic in seed.
/// The result is always producible.
SymbolSequence Sample(const MooreMarkovSource& source, std::size_t n,
                      std::uint64_t seed);

/// Number of producible sequences of length n, saturating at UINT64_MAX.
std::uint64_t CountProducible(const MooreMarkovSource& source, std::size_t n);

/// All producible sequences of length exactly n, in lexicographic order of
/// symbol indices.  Throws GuardExceeded when there would be more than
/// `guard` of them.
std::vector<SymbolSequence> EnumerateProducible(
    const MooreMarkovSource& source, std::size_t n,
    std::size_t guard = kEnumerationGuard);

}  // namespace udec

#endif  // UDEC_SOURCE_MODEL_H_
