// src/alphabet.cc

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

#include "udec/alphabet.h"

#include <algorithm>

#include "udec/errors.h"

namespace udec {

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty())
      throw InputError("alphabet: symbol " + std::to_string(i) +
                       " has an empty name");
    auto [it, inserted] =
        index_.emplace(symbols_[i], static_cast<SymbolId>(i));
    if (!inserted)
      throw InputError("alphabet: duplicate symbol '" + symbols_[i] + "'");
  }
}

bool Alphabet::Contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

SymbolId Alphabet::IndexOf(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw InputError("unknown symbol '" + std::string(name) + "'");
  return it->second;
}

bool Alphabet::IsCharacterAlphabet() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

SymbolSequence Alphabet::Parse(std::string_view text) const {
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  SymbolSequence seq;
  if (std::any_of(text.begin(), text.end(), is_sep)) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) ++j;
      if (j > i) seq.push_back(IndexOf(text.substr(i, j - i)));
      i = j;
    }
  } else if (IsCharacterAlphabet()) {
    for (char c : text) seq.push_back(IndexOf(std::string_view(&c, 1)));
  } else if (!text.empty()) {
    seq.push_back(IndexOf(text));
  }
  return seq;
}

SymbolSequence Alphabet::FromNames(std::span<const std::string> names) const {
  SymbolSequence seq;
  seq.reserve(names.size());
  for (const auto& n : names) seq.push_back(IndexOf(n));
  return seq;
}

std::vector<std::string> Alphabet::Names(
    std::span<const SymbolId> seq) const {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (SymbolId s : seq) out.push_back(symbols_.at(s));
  return out;
}

std::string Alphabet::Format(std::span<const SymbolId> seq) const {
  const bool compact = IsCharacterAlphabet();
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += symbols_.at(seq[i]);
  }
  return out;
}

}  // namespace udec
