// src/trellis_decoder.cc

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
#include <optional>

#include "udec/decodability.h"

namespace udec {

namespace {

// Trellis node (offset, context): context 0 is "nothing decoded yet" and is
// only used at offset 0; context 1 + s means the last decoded symbol is s.
// Path counts saturate at 2, which is all the ambiguity check needs.
class Trellis {
 public:
  Trellis(const ContextWords& words, std::string_view digits)
      : words_(words),
        digits_(digits),
        contexts_(words.words.size()),
        count_((digits.size() + 1) * contexts_, 0) {
    Count(0, 0) = 1;
    for (std::size_t o = 0; o < digits_.size(); ++o) {
      for (std::size_t c = 0; c < contexts_; ++c) {
        const int here = Count(o, c);
        if (here == 0) continue;
        for (std::size_t s = 0; s + 1 < contexts_; ++s) {
          const auto& w = words_.words[c][s];
          if (!w || !Matches(o, *w)) continue;
          int& there = Count(o + w->size(), s + 1);
          there = std::min(2, there + here);
        }
      }
    }
  }

  struct Node {
    std::size_t offset;
    std::size_t context;
    bool operator==(const Node&) const = default;
  };

  std::vector<Node> EndNodes() const {
    std::vector<Node> out;
    for (std::size_t c = 0; c < contexts_; ++c)
      if (Count(digits_.size(), c) > 0) out.push_back({digits_.size(), c});
    return out;
  }

  int Paths(const Node& n) const { return Count(n.offset, n.context); }

  // Reachable predecessors of a node, in context order.
  std::vector<Node> Predecessors(const Node& n) const {
    std::vector<Node> out;
    if (n.context == 0) return out;
    const std::size_t s = n.context - 1;
    for (std::size_t c = 0; c < contexts_; ++c) {
      const auto& w = words_.words[c][s];
      if (!w || w->size() > n.offset) continue;
      const std::size_t from = n.offset - w->size();
      if (Count(from, c) > 0 && Matches(from, *w)) out.push_back({from, c});
    }
    return out;
  }

  // Nodes from the start to `n`, following the first predecessor each time.
  std::vector<Node> AnyPathTo(Node n) const {
    std::vector<Node> path{n};
    while (n.context != 0) {
      n = Predecessors(n).front();
      path.push_back(n);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  static SymbolSequence Symbols(const std::vector<Node>& path) {
    SymbolSequence out;
    for (const auto& n : path)
      if (n.context != 0) out.push_back(static_cast<SymbolId>(n.context - 1));
    return out;
  }

 private:
  bool Matches(std::size_t offset, const std::string& w) const {
    return digits_.compare(offset, w.size(), w) == 0;
  }
  int& Count(std::size_t o, std::size_t c) { return count_[o * contexts_ + c]; }
  int Count(std::size_t o, std::size_t c) const {
    return count_[o * contexts_ + c];
  }

  const ContextWords& words_;
  std::string_view digits_;
  std::size_t contexts_;
  std::vector<int> count_;
};

}  // namespace

SymbolSequence Decode(const MooreMarkovSource& source, const AnyCode& code,
                      std::string_view digits) {
  const ContextWords words = BindToSource(code, source);
  CheckDigits(digits, words.radix, "digit string");
  const Trellis trellis(words, digits);

  const auto ends = trellis.EndNodes();
  if (ends.empty())
    throw NoParseError("no producible sequence encodes to '" +
                       std::string(digits) + "'");
  int total = 0;
  for (const auto& e : ends) total += trellis.Paths(e);

  std::vector<Trellis::Node> first = trellis.AnyPathTo(ends.front());
  if (total == 1) return Trellis::Symbols(first);

  // Find a second path: either another end node, or walk back along the
  // first path to the last node that has a second reachable predecessor.
  std::vector<Trellis::Node> second;
  if (ends.size() > 1) {
    second = trellis.AnyPathTo(ends[1]);
  } else {
    for (std::size_t i = first.size() - 1; i > 0 && second.empty(); --i) {
      for (const auto& pred : trellis.Predecessors(first[i])) {
        if (pred == first[i - 1]) continue;
        second = trellis.AnyPathTo(pred);
        second.insert(second.end(), first.begin() + static_cast<long>(i),
                      first.end());
        break;
      }
    }
  }
  SymbolSequence a = Trellis::Symbols(first);
  SymbolSequence b = Trellis::Symbols(second);
  if (b < a) std::swap(a, b);
  throw AmbiguousParseError("digit string '" + std::string(digits) +
                                "' has more than one producible parse",
                            std::move(a), std::move(b));
}

}  // namespace udec
