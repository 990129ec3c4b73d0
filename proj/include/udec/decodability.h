// include/udec/decodability.h

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

#ifndef UDEC_DECODABILITY_H_
#define UDEC_DECODABILITY_H_

// Unique decodability of a code *for a source*: no two distinct producible
// symbol sequences may share an encoding.  For constrained sources this is
// strictly weaker than the classic (source-free) notion, so Kraft's
// inequality need not hold.  What does hold is the spectral condition
// rho(Q) <= 1, where Q combines the source's support with D^{-l} weights.
// That condition is necessary only; a passing check certifies nothing.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udec/codebook.h"
#include "udec/errors.h"
#include "udec/matrix.h"
#include "udec/source_model.h"

namespace udec {

/// Slack on the rho <= 1 verdict; boundary cases sit exactly at rho = 1.
inline constexpr double kNecessaryConditionSlack = 1e-9;

struct QMatrix {
  enum class Form { kMoore, kMealy };

  Matrix entries;
  int radix = 2;
  Form form = Form::kMoore;
};

/// Q(i, j) = D^{-l_j} when P(i, j) > 0, else 0.
QMatrix BuildQMoore(const MooreMarkovSource& source, const Codebook& code);

/// Q(i, j) = sum over h in O(i, j) of D^{-l_h}; empty O(i, j) gives 0.
QMatrix BuildQMealy(const MealySource& source, const Codebook& code);

/// Spectral radius of a nonnegative square matrix, within `tol`.
///
/// The matrix is split into strongly connected components and each
/// component is handled by power iteration on (Q_c + I) from the all-ones
/// vector, renormalized in the max norm.  The Collatz-Wielandt ratios
/// min_i (Ax)_i / x_i and max_i (Ax)_i / x_i bracket rho(Q_c) + 1 at every
/// step; iteration stops once the bracket is narrower than `tol`.  Throws
/// InputError on negative or non-finite entries and ConvergenceError
/// (reporting the bracket) after `max_iterations`.
double SpectralRadius(const Matrix& q, double tol = 1e-10,
                      std::size_t max_iterations = 1'000'000);
inline double SpectralRadius(const QMatrix& q, double tol = 1e-10) {
  return SpectralRadius(q.entries, tol);
}

struct NecessaryConditionResult {
  double rho = 0.0;
  bool passes = false;
};

/// rho of Q restricted to the symbols (or states) reachable from the
/// initial support, and whether it is <= 1 + kNecessaryConditionSlack.
/// When every symbol is reachable this is exactly rho(Q).  A failure proves
/// the code is not uniquely decodable for the source.
NecessaryConditionResult CheckNecessaryCondition(
    const MooreMarkovSource& source, const Codebook& code);
NecessaryConditionResult CheckNecessaryCondition(const MealySource& source,
                                                 const Codebook& code);

struct DecodabilityVerdict {
  bool decodable = true;
  /// Two distinct producible sequences with equal encodings, present iff
  /// not decodable.  The lexicographically smaller sequence comes first.
  std::optional<std::pair<SymbolSequence, SymbolSequence>> witness;
};

/// Exact decision of unique decodability for the source.
///
/// Two parses of one digit string are grown in lockstep.  While they agree
/// the search state is just the last symbol; once they pick different
/// symbols it is (last symbol of the parse that is ahead, how much of that
/// symbol's word is still unmatched, last symbol of the parse behind, which
/// parse is ahead).  The behind parse is extended by every source-allowed
/// symbol whose word is consistent with the unmatched digits.  Reaching an
/// empty remainder after divergence is a collision.  The state space is
/// finite, so breadth-first search terminates and yields a shortest witness.
DecodabilityVerdict TestUniqueDecodability(const MooreMarkovSource& source,
                                           const Codebook& code);

/// Bounded oracle: enumerates every producible sequence with 1 to
/// `max_symbols` symbols and reports the first encoding collision.  A
/// "decodable" answer only means no collision exists up to that bound.
/// Throws GuardExceeded when more than `guard` sequences would be listed.
DecodabilityVerdict BruteForceUniqueDecodability(
    const MooreMarkovSource& source, const Codebook& code,
    std::size_t max_symbols, std::size_t guard = kEnumerationGuard);

/// N(r): number of producible length-k sequences whose encoding has r
/// digits.  Counted by dynamic programming over (last symbol, length);
/// throws GuardExceeded if a count overflows 64 bits.
std::map<std::size_t, std::uint64_t> CountByCodeLength(
    const MooreMarkovSource& source, const AnyCode& code, std::size_t k);

/// The digit string admits no producible parse.
class NoParseError : public Error {
 public:
  using Error::Error;
};

/// The digit string admits two or more producible parses.
class AmbiguousParseError : public Error {
 public:
  AmbiguousParseError(const std::string& what, SymbolSequence first,
                      SymbolSequence second)
      : Error(what), first_(std::move(first)), second_(std::move(second)) {}
  const SymbolSequence& first() const { return first_; }
  const SymbolSequence& second() const { return second_; }

 private:
  SymbolSequence first_;
  SymbolSequence second_;
};

/// Recovers the producible sequence whose encoding is `digits`, by dynamic
/// programming over (digit offset, last symbol) keeping every viable
/// parse.  Throws InputError on a non-digit character, NoParseError when
/// nothing parses, and AmbiguousParseError with two parses when more than
/// one does.
SymbolSequence Decode(const MooreMarkovSource& source, const AnyCode& code,
                      std::string_view digits);

}  // namespace udec

#endif  // UDEC_DECODABILITY_H_
