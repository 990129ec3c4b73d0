// include/udec/codebook.h

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

#ifndef UDEC_CODEBOOK_H_
#define UDEC_CODEBOOK_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "udec/alphabet.h"
#include "udec/source_model.h"

namespace udec {

/// Largest supported code radix; digits are written 0-9 then a-z.
inline constexpr int kMaxRadix = 36;

/// Value of a digit character, or -1 if it is not a digit in any radix.
int DigitValue(char c);
char DigitChar(int value);
/// Throws InputError if `digits` contains a character that is not a digit
/// below `radix`.
void CheckDigits(std::string_view digits, int radix, std::string_view what);

/// Fixed symbol-to-codeword map over a D-ary code alphabet.
class Codebook {
 public:
  /// Throws InputError on radix outside [2, 36], an empty word, or a digit
  /// that is not below the radix.
  Codebook(int radix, std::map<std::string, std::string> words);

  int radix() const { return radix_; }
  const std::map<std::string, std::string>& words() const { return words_; }
  bool Has(const std::string& symbol) const { return words_.count(symbol) > 0; }
  /// Throws InputError when the symbol has no word.
  const std::string& WordFor(const std::string& symbol) const;

  /// Words listed in alphabet order; throws InputError if one is missing.
  std::vector<std::string> AlignTo(const Alphabet& alphabet) const;
  /// Word lengths in alphabet order.
  std::vector<std::size_t> LengthsFor(const Alphabet& alphabet) const;

  bool IsPrefixFree() const;

 private:
  int radix_;
  std::map<std::string, std::string> words_;
};

/// Code whose word for a symbol depends on the previous symbol.  The first
/// symbol uses `initial`; later symbols use `by_previous[prev][cur]`.
class StateDependentCode {
 public:
  /// Throws InputError on a bad radix, empty word, bad digit, or a context
  /// (the initial one or a previous symbol) whose words are not prefix-free.
  StateDependentCode(
      int radix, std::map<std::string, std::string> initial,
      std::map<std::string, std::map<std::string, std::string>> by_previous);

  int radix() const { return radix_; }
  const std::map<std::string, std::string>& initial() const { return initial_; }
  const std::map<std::string, std::map<std::string, std::string>>&
  by_previous() const {
    return by_previous_;
  }

  const std::string* InitialWord(const std::string& symbol) const;
  const std::string* SuccessorWord(const std::string& previous,
                                   const std::string& symbol) const;

 private:
  int radix_;
  std::map<std::string, std::string> initial_;
  std::map<std::string, std::map<std::string, std::string>> by_previous_;
};

using AnyCode = std::variant<Codebook, StateDependentCode>;

int Radix(const AnyCode& code);

/// Word table of a code bound to a source.  Row 0 is the start context and
/// row 1 + s the context "previous symbol was s"; an entry is present iff
/// the transition is allowed by the source.  Throws InputError if an
/// allowed transition has no word.
struct ContextWords {
  int radix = 2;
  std::vector<std::vector<std::optional<std::string>>> words;

  const std::optional<std::string>& Start(SymbolId s) const {
    return words[0][s];
  }
  const std::optional<std::string>& After(SymbolId prev, SymbolId s) const {
    return words[prev + 1][s];
  }
};
ContextWords BindToSource(const AnyCode& code, const MooreMarkovSource& source);

/// Concatenation of the symbols' words.  Throws InputError on a symbol
/// without a word.
std::string Encode(const Codebook& code, std::span<const std::string> seq);
std::string Encode(const Codebook& code, const Alphabet& alphabet,
                   std::span<const SymbolId> seq);

/// Initial word for the first symbol, then the word chosen by each
/// (previous, current) pair.  Throws InputError on an undefined pair.
std::string EncodeStateDependent(const StateDependentCode& code,
                                 std::span<const std::string> seq);
std::string EncodeStateDependent(const StateDependentCode& code,
                                 const Alphabet& alphabet,
                                 std::span<const SymbolId> seq);

std::string Encode(const AnyCode& code, const Alphabet& alphabet,
                   std::span<const SymbolId> seq);

/// Number of code digits Encode would produce, without building the
/// string.  `words` must come from BindToSource and seq must be producible.
std::size_t EncodedLength(const ContextWords& words,
                          std::span<const SymbolId> seq);

/// sum_i D^{-l_i}.  Exact rational arithmetic when every length is <= 64
/// and D <= 16, otherwise summed smallest terms first in long double.
double KraftSum(const Codebook& code);
/// Exact comparison of the Kraft sum against 1 under the same regime.
std::partial_ordering KraftSumVersusOne(const Codebook& code);
/// Kraft sum of a length multiset.
double KraftSum(std::span<const std::size_t> lengths, int radix);

/// E[l(X_1 ... X_n)] from the forward marginals.  Throws InputError when a
/// positive-probability symbol or transition has no word.
double ExpectedLength(const Codebook& code, const MooreMarkovSource& source,
                      std::size_t n);
double ExpectedLength(const StateDependentCode& code,
                      const MooreMarkovSource& source, std::size_t n);
double ExpectedLength(const AnyCode& code, const MooreMarkovSource& source,
                      std::size_t n);

/// State-dependent code built from the source probabilities: in each
/// context, symbol s gets length ceil(-log_D p(s)) and words are assigned
/// canonically, ordered by length then alphabet order, counting upward from
/// zero.  With equal lengths in a context this is plain alphabet order.
StateDependentCode ShannonStateDependentCode(const MooreMarkovSource& source,
                                             int radix = 2);

}  // namespace udec

#endif  // UDEC_CODEBOOK_H_
