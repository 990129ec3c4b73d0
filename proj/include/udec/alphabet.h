// include/udec/alphabet.h

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

#ifndef UDEC_ALPHABET_H_
#define UDEC_ALPHABET_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace udec {

/// A symbol is identified by its position in the source alphabet.
using SymbolId = int;

/// A finite (possibly empty) sequence of source symbols, by index.
using SymbolSequence = std::vector<SymbolId>;

/// Ordered list of distinct symbol names.  Symbol order is significant: it
/// fixes matrix row/column order and the lexicographic order of sequences.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws InputError on an empty name or a duplicate.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::string& operator[](SymbolId id) const { return symbols_[id]; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  bool Contains(std::string_view name) const;
  /// Throws InputError naming the unknown symbol.
  SymbolId IndexOf(std::string_view name) const;

  /// True when every symbol name is a single character, so sequences can be
  /// written without separators ("ACD").
  bool IsCharacterAlphabet() const;

  /// Parses text into a sequence.  Text containing whitespace or commas is
  /// split on them; otherwise a character alphabet is split per character and
  /// any other alphabet treats the whole text as one symbol.
  SymbolSequence Parse(std::string_view text) const;
  SymbolSequence FromNames(std::span<const std::string> names) const;

  std::vector<std::string> Names(std::span<const SymbolId> seq) const;
  /// Inverse of Parse: concatenated for character alphabets, otherwise
  /// space separated.
  std::string Format(std::span<const SymbolId> seq) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

}  // namespace udec

#endif  // UDEC_ALPHABET_H_
