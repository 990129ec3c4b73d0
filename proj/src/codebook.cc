// src/codebook.cc

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

#include "udec/codebook.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "udec/errors.h"

namespace udec {

int DigitValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

char DigitChar(int value) {
  return value < 10 ? static_cast<char>('0' + value)
                    : static_cast<char>('a' + value - 10);
}

void CheckDigits(std::string_view digits, int radix, std::string_view what) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int v = DigitValue(digits[i]);
    if (v < 0 || v >= radix)
      throw InputError(std::string(what) + ": character '" +
                       std::string(1, digits[i]) + "' at offset " +
                       std::to_string(i) + " is not a radix-" +
                       std::to_string(radix) + " digit");
  }
}

namespace {

void CheckRadix(int radix) {
  if (radix < 2 || radix > kMaxRadix)
    throw InputError("radix " + std::to_string(radix) +
                     " is outside [2, " + std::to_string(kMaxRadix) + "]");
}

void CheckWord(const std::string& word, int radix, const std::string& what) {
  if (word.empty()) throw InputError(what + ": empty codeword");
  CheckDigits(word, radix, what);
}

bool IsPrefixOf(std::string_view a, std::string_view b) {
  return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

// True iff no word is a prefix of another (equal words count as a clash).
bool PrefixFree(std::vector<std::string> words) {
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i)
    if (IsPrefixOf(words[i - 1], words[i])) return false;
  return true;
}

std::vector<std::string> Values(const std::map<std::string, std::string>& m) {
  std::vector<std::string> out;
  out.reserve(m.size());
  for (const auto& [k, v] : m) out.push_back(v);
  return out;
}

}  // namespace

Codebook::Codebook(int radix, std::map<std::string, std::string> words)
    : radix_(radix), words_(std::move(words)) {
  CheckRadix(radix_);
  for (const auto& [sym, word] : words_) CheckWord(word, radix_, "word for '" + sym + "'");
}

const std::string& Codebook::WordFor(const std::string& symbol) const {
  auto it = words_.find(symbol);
  if (it == words_.end())
    throw InputError("no codeword for symbol '" + symbol + "'");
  return it->second;
}

std::vector<std::string> Codebook::AlignTo(const Alphabet& alphabet) const {
  std::vector<std::string> out;
  out.reserve(alphabet.size());
  for (const auto& sym : alphabet.symbols()) out.push_back(WordFor(sym));
  return out;
}

std::vector<std::size_t> Codebook::LengthsFor(const Alphabet& alphabet) const {
  std::vector<std::size_t> out;
  out.reserve(alphabet.size());
  for (const auto& sym : alphabet.symbols()) out.push_back(WordFor(sym).size());
  return out;
}

bool Codebook::IsPrefixFree() const { return PrefixFree(Values(words_)); }

StateDependentCode::StateDependentCode(
    int radix, std::map<std::string, std::string> initial,
    std::map<std::string, std::map<std::string, std::string>> by_previous)
    : radix_(radix),
      initial_(std::move(initial)),
      by_previous_(std::move(by_previous)) {
  CheckRadix(radix_);
  for (const auto& [sym, word] : initial_)
    CheckWord(word, radix_, "initial word for '" + sym + "'");
  if (!PrefixFree(Values(initial_)))
    throw InputError("initial words are not prefix-free");
  for (const auto& [prev, row] : by_previous_) {
    for (const auto& [sym, word] : row)
      CheckWord(word, radix_, "word for '" + sym + "' after '" + prev + "'");
    if (!PrefixFree(Values(row)))
      throw InputError("words after '" + prev + "' are not prefix-free");
  }
}

const std::string* StateDependentCode::InitialWord(
    const std::string& symbol) const {
  auto it = initial_.find(symbol);
  return it == initial_.end() ? nullptr : &it->second;
}

const std::string* StateDependentCode::SuccessorWord(
    const std::string& previous, const std::string& symbol) const {
  auto row = by_previous_.find(previous);
  if (row == by_previous_.end()) return nullptr;
  auto it = row->second.find(symbol);
  return it == row->second.end() ? nullptr : &it->second;
}

int Radix(const AnyCode& code) {
  return std::visit([](const auto& c) { return c.radix(); }, code);
}

ContextWords BindToSource(const AnyCode& code,
                          const MooreMarkovSource& source) {
  const std::size_t m = source.size();
  const auto& names = source.alphabet().symbols();
  ContextWords out;
  out.radix = Radix(code);
  out.words.assign(m + 1, std::vector<std::optional<std::string>>(m));

  if (const auto* fixed = std::get_if<Codebook>(&code)) {
    const auto aligned = fixed->AlignTo(source.alphabet());
    for (std::size_t s = 0; s < m; ++s) {
      if (source.CanStart(static_cast<SymbolId>(s))) out.words[0][s] = aligned[s];
      for (std::size_t prev = 0; prev < m; ++prev)
        if (source.CanFollow(static_cast<SymbolId>(prev), static_cast<SymbolId>(s)))
          out.words[prev + 1][s] = aligned[s];
    }
    return out;
  }

  const auto& sd = std::get<StateDependentCode>(code);
  for (std::size_t s = 0; s < m; ++s) {
    if (source.CanStart(static_cast<SymbolId>(s))) {
      const std::string* w = sd.InitialWord(names[s]);
      if (w == nullptr)
        throw InputError("no initial codeword for symbol '" + names[s] + "'");
      out.words[0][s] = *w;
    }
    for (std::size_t prev = 0; prev < m; ++prev) {
      if (!source.CanFollow(static_cast<SymbolId>(prev), static_cast<SymbolId>(s)))
        continue;
      const std::string* w = sd.SuccessorWord(names[prev], names[s]);
      if (w == nullptr)
        throw InputError("no codeword for '" + names[s] + "' after '" +
                         names[prev] + "'");
      out.words[prev + 1][s] = *w;
    }
  }
  return out;
}

std::string Encode(const Codebook& code, std::span<const std::string> seq) {
  std::string out;
  for (const auto& sym : seq) out += code.WordFor(sym);
  return out;
}

std::string Encode(const Codebook& code, const Alphabet& alphabet,
                   std::span<const SymbolId> seq) {
  return Encode(code, alphabet.Names(seq));
}

std::string EncodeStateDependent(const StateDependentCode& code,
                                 std::span<const std::string> seq) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const std::string* w = k == 0 ? code.InitialWord(seq[k])
                                  : code.SuccessorWord(seq[k - 1], seq[k]);
    if (w == nullptr) {
      if (k == 0)
        throw InputError("no initial codeword for symbol '" + seq[k] + "'");
      throw InputError("no codeword for '" + seq[k] + "' after '" +
                       seq[k - 1] + "' (transition " + std::to_string(k - 1) +
                       "->" + std::to_string(k) + ")");
    }
    out += *w;
  }
  return out;
}

std::string EncodeStateDependent(const StateDependentCode& code,
                                 const Alphabet& alphabet,
                                 std::span<const SymbolId> seq) {
  return EncodeStateDependent(code, alphabet.Names(seq));
}

std::string Encode(const AnyCode& code, const Alphabet& alphabet,
                   std::span<const SymbolId> seq) {
  if (const auto* fixed = std::get_if<Codebook>(&code))
    return Encode(*fixed, alphabet, seq);
  return EncodeStateDependent(std::get<StateDependentCode>(code), alphabet, seq);
}

std::size_t EncodedLength(const ContextWords& words,
                          std::span<const SymbolId> seq) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& w = k == 0 ? words.Start(seq[k]) : words.After(seq[k - 1], seq[k]);
    if (!w) throw InputError("sequence is not producible at position " +
                             std::to_string(k));
    total += w->size();
  }
  return total;
}

double KraftSum(std::span<const std::size_t> lengths, int radix) {
  if (lengths.empty()) return 0.0;
  const std::size_t longest = *std::max_element(lengths.begin(), lengths.end());
  if (longest <= 64 && radix <= 16) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    cpp_int numerator = 0;
    for (std::size_t l : lengths)
      numerator += boost::multiprecision::pow(cpp_int(radix),
                                              static_cast<unsigned>(longest - l));
    const cpp_int denominator =
        boost::multiprecision::pow(cpp_int(radix), static_cast<unsigned>(longest));
    return cpp_rational(numerator, denominator).convert_to<double>();
  }
  std::vector<std::size_t> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.rbegin(), sorted.rend());
  long double sum = 0.0L;
  for (std::size_t l : sorted)
    sum += std::pow(static_cast<long double>(radix), -static_cast<long double>(l));
  return static_cast<double>(sum);
}

double KraftSum(const Codebook& code) {
  std::vector<std::size_t> lengths;
  for (const auto& [sym, word] : code.words()) lengths.push_back(word.size());
  return KraftSum(lengths, code.radix());
}

std::partial_ordering KraftSumVersusOne(const Codebook& code) {
  std::vector<std::size_t> lengths;
  for (const auto& [sym, word] : code.words()) lengths.push_back(word.size());
  if (lengths.empty()) return std::partial_ordering::less;
  const std::size_t longest = *std::max_element(lengths.begin(), lengths.end());
  if (longest <= 64 && code.radix() <= 16) {
    using boost::multiprecision::cpp_int;
    cpp_int numerator = 0;
    for (std::size_t l : lengths)
      numerator += boost::multiprecision::pow(cpp_int(code.radix()),
                                              static_cast<unsigned>(longest - l));
    const cpp_int denominator = boost::multiprecision::pow(
        cpp_int(code.radix()), static_cast<unsigned>(longest));
    if (numerator < denominator) return std::partial_ordering::less;
    if (numerator > denominator) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return KraftSum(code) <=> 1.0;
}

double ExpectedLength(const Codebook& code, const MooreMarkovSource& source,
                      std::size_t n) {
  const std::size_t m = source.size();
  const auto& names = source.alphabet().symbols();
  std::vector<double> length(m, 0.0);
  std::vector<bool> has(m, false);
  for (std::size_t s = 0; s < m; ++s) {
    if (code.Has(names[s])) {
      length[s] = static_cast<double>(code.WordFor(names[s]).size());
      has[s] = true;
    }
  }
  double total = 0.0;
  std::vector<double> marginal = source.initial();
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t s = 0; s < m; ++s) {
      if (marginal[s] <= 0.0) continue;
      if (!has[s])
        throw InputError("no codeword for symbol '" + names[s] +
                         "', which has positive probability at step " +
                         std::to_string(k));
      total += marginal[s] * length[s];
    }
    if (k < n) marginal = LeftMultiply(marginal, source.transition());
  }
  return total;
}

double ExpectedLength(const StateDependentCode& code,
                      const MooreMarkovSource& source, std::size_t n) {
  if (n == 0) return 0.0;
  const std::size_t m = source.size();
  const auto& names = source.alphabet().symbols();

  double total = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    if (source.initial()[s] <= 0.0) continue;
    const std::string* w = code.InitialWord(names[s]);
    if (w == nullptr)
      throw InputError("no initial codeword for symbol '" + names[s] + "'");
    total += source.initial()[s] * static_cast<double>(w->size());
  }

  // Expected word length given the previous symbol, only where needed.
  std::vector<double> step_length(m, 0.0);
  std::vector<bool> computed(m, false);
  auto conditional = [&](std::size_t prev) {
    if (computed[prev]) return step_length[prev];
    double e = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
      const double p = source.transition()(prev, s);
      if (p <= 0.0) continue;
      const std::string* w = code.SuccessorWord(names[prev], names[s]);
      if (w == nullptr)
        throw InputError("no codeword for '" + names[s] + "' after '" +
                         names[prev] + "'");
      e += p * static_cast<double>(w->size());
    }
    computed[prev] = true;
    return step_length[prev] = e;
  };

  std::vector<double> marginal = source.initial();
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t prev = 0; prev < m; ++prev)
      if (marginal[prev] > 0.0) total += marginal[prev] * conditional(prev);
    marginal = LeftMultiply(marginal, source.transition());
  }
  return total;
}

double ExpectedLength(const AnyCode& code, const MooreMarkovSource& source,
                      std::size_t n) {
  return std::visit(
      [&](const auto& c) { return ExpectedLength(c, source, n); }, code);
}

namespace {

// Canonical words for (symbol, length) pairs: sort by length then symbol
// index and count upward, shifting left whenever the length grows.
std::map<std::size_t, std::string> CanonicalWords(
    std::vector<std::pair<std::size_t, std::size_t>> length_symbol,
    int radix) {
  std::sort(length_symbol.begin(), length_symbol.end());
  std::map<std::size_t, std::string> out;
  std::vector<int> digits;  // current value, most significant digit first
  auto increment = [&] {
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < radix) return;
      digits[i] = 0;
    }
    throw InputError("lengths violate Kraft's inequality in some context");
  };
  bool first = true;
  for (const auto& [length, symbol] : length_symbol) {
    if (first) {
      digits.assign(length, 0);
      first = false;
    } else {
      increment();
      digits.resize(length, 0);
    }
    std::string word;
    for (int d : digits) word += DigitChar(d);
    out[symbol] = word;
  }
  return out;
}

std::size_t ShannonLength(double p, int radix) {
  std::size_t l = 1;
  double bound = 1.0 / radix;
  // Smallest l >= 1 with D^{-l} <= p, with slack for rounded dyadic inputs.
  while (bound > p * (1.0 + 1e-12)) {
    bound /= radix;
    ++l;
  }
  return l;
}

std::map<std::string, std::string> ContextCode(std::span<const double> probs,
                                               const Alphabet& alphabet,
                                               int radix) {
  std::vector<std::pair<std::size_t, std::size_t>> length_symbol;
  for (std::size_t s = 0; s < probs.size(); ++s)
    if (probs[s] > 0.0) length_symbol.emplace_back(ShannonLength(probs[s], radix), s);
  std::map<std::string, std::string> out;
  for (const auto& [s, word] : CanonicalWords(length_symbol, radix))
    out[alphabet[static_cast<SymbolId>(s)]] = word;
  return out;
}

}  // namespace

StateDependentCode ShannonStateDependentCode(const MooreMarkovSource& source,
                                             int radix) {
  CheckRadix(radix);
  auto initial = ContextCode(source.initial(), source.alphabet(), radix);
  std::map<std::string, std::map<std::string, std::string>> by_previous;
  for (std::size_t prev = 0; prev < source.size(); ++prev)
    by_previous[source.alphabet()[static_cast<SymbolId>(prev)]] =
        ContextCode(source.transition().row(prev), source.alphabet(), radix);
  return StateDependentCode(radix, std::move(initial), std::move(by_previous));
}

}  // namespace udec
