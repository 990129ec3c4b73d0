// src/unique_decodability.cc

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
#include <deque>
#include <limits>
#include <string_view>
#include <unordered_map>

#include "udec/decodability.h"

namespace udec {

namespace {

constexpr int kNone = -1;

bool IsPrefixOf(std::string_view a, std::string_view b) {
  return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

std::pair<SymbolSequence, SymbolSequence> Ordered(SymbolSequence a,
                                                  SymbolSequence b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Symbols appended to parse 0 and parse 1 by one search step (kNone = none).
struct Step {
  int parent = kNone;
  SymbolId first = kNone;
  SymbolId second = kNone;
};

// Search over pairs of parses of one digit string.
//
// Undiverged states (both parses identical so far) are indexed by the last
// symbol plus one, with 0 for the empty prefix.  Diverged states are
// (ahead, matched, behind, side): `ahead` is the last symbol of the parse
// whose encoding is longer, `matched` how many digits of its word the other
// parse has already covered (0 < matched < |word|), `behind` the last
// symbol of the shorter parse, and `side` which of the two parses is ahead.
class AmbiguitySearch {
 public:
  AmbiguitySearch(const MooreMarkovSource& source, const Codebook& code)
      : source_(source),
        words_(code.AlignTo(source.alphabet())),
        m_(static_cast<int>(source.size())) {
    suffix_base_.assign(m_ + 1, 0);
    for (int a = 0; a < m_; ++a)
      suffix_base_[a + 1] =
          suffix_base_[a] + static_cast<int>(words_[a].size()) - 1;
    const std::size_t states =
        static_cast<std::size_t>(m_ + 1) +
        static_cast<std::size_t>(suffix_base_[m_]) * m_ * 2;
    steps_.assign(states, Step{});
    visited_.assign(states, false);
  }

  DecodabilityVerdict Run() {
    std::deque<int> queue;
    Visit(Undiverged(kNone), Step{}, queue);
    while (!queue.empty()) {
      const int state = queue.front();
      queue.pop_front();
      if (state <= m_) {
        if (ExpandUndiverged(state - 1, state, queue)) return verdict_;
      } else {
        if (ExpandDiverged(state, queue)) return verdict_;
      }
    }
    return DecodabilityVerdict{};
  }

 private:
  bool Allowed(SymbolId prev, SymbolId s) const {
    return prev == kNone ? source_.CanStart(s) : source_.CanFollow(prev, s);
  }

  int Undiverged(SymbolId last) const { return last + 1; }

  int Diverged(SymbolId ahead, int matched, SymbolId behind, int side) const {
    const int suffix = suffix_base_[ahead] + matched - 1;
    return m_ + 1 + ((suffix * m_ + behind) * 2 + side);
  }

  struct DivergedState {
    SymbolId ahead;
    int matched;
    SymbolId behind;
    int side;
  };

  DivergedState Unpack(int state) const {
    int rest = state - (m_ + 1);
    DivergedState d{};
    d.side = rest % 2;
    rest /= 2;
    d.behind = rest % m_;
    const int suffix = rest / m_;
    d.ahead = static_cast<SymbolId>(
        std::upper_bound(suffix_base_.begin(), suffix_base_.end(), suffix) -
        suffix_base_.begin() - 1);
    d.matched = suffix - suffix_base_[d.ahead] + 1;
    return d;
  }

  void Visit(int state, Step step, std::deque<int>& queue) {
    if (visited_[state]) return;
    visited_[state] = true;
    steps_[state] = step;
    queue.push_back(state);
  }

  bool ExpandUndiverged(SymbolId last, int state, std::deque<int>& queue) {
    for (SymbolId s1 = 0; s1 < m_; ++s1) {
      if (!Allowed(last, s1)) continue;
      Visit(Undiverged(s1), Step{state, s1, s1}, queue);
    }
    for (SymbolId s1 = 0; s1 < m_; ++s1) {
      if (!Allowed(last, s1)) continue;
      for (SymbolId s2 = s1 + 1; s2 < m_; ++s2) {
        if (!Allowed(last, s2)) continue;
        const std::string& w1 = words_[s1];
        const std::string& w2 = words_[s2];
        const Step step{state, s1, s2};
        if (w1 == w2) {
          Finish(step);
          return true;
        }
        if (IsPrefixOf(w1, w2)) {
          Visit(Diverged(s2, static_cast<int>(w1.size()), s1, 1), step, queue);
        } else if (IsPrefixOf(w2, w1)) {
          Visit(Diverged(s1, static_cast<int>(w2.size()), s2, 0), step, queue);
        }
      }
    }
    return false;
  }

  bool ExpandDiverged(int state, std::deque<int>& queue) {
    const DivergedState d = Unpack(state);
    const std::string_view rest =
        std::string_view(words_[d.ahead]).substr(d.matched);
    for (SymbolId s = 0; s < m_; ++s) {
      if (!Allowed(d.behind, s)) continue;
      const std::string& w = words_[s];
      Step step{state, kNone, kNone};
      (d.side == 0 ? step.second : step.first) = s;
      if (w == rest) {
        Finish(step);
        return true;
      }
      if (IsPrefixOf(w, rest)) {
        Visit(Diverged(d.ahead, d.matched + static_cast<int>(w.size()),
                       s, d.side),
              step, queue);
      } else if (IsPrefixOf(rest, w)) {
        Visit(Diverged(s, static_cast<int>(rest.size()), d.ahead, 1 - d.side),
              step, queue);
      }
    }
    return false;
  }

  // Replays the parent chain that ends with `last` into the witness.
  void Finish(const Step& last) {
    std::vector<Step> chain{last};
    for (int s = last.parent; s != kNone; s = steps_[s].parent)
      chain.push_back(steps_[s]);
    SymbolSequence first, second;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (it->first != kNone) first.push_back(it->first);
      if (it->second != kNone) second.push_back(it->second);
    }
    verdict_.decodable = false;
    verdict_.witness = Ordered(std::move(first), std::move(second));
  }

  const MooreMarkovSource& source_;
  std::vector<std::string> words_;
  int m_;
  std::vector<int> suffix_base_;
  std::vector<Step> steps_;
  std::vector<bool> visited_;
  DecodabilityVerdict verdict_;
};

}  // namespace

DecodabilityVerdict TestUniqueDecodability(const MooreMarkovSource& source,
                                           const Codebook& code) {
  return AmbiguitySearch(source, code).Run();
}

DecodabilityVerdict BruteForceUniqueDecodability(
    const MooreMarkovSource& source, const Codebook& code,
    std::size_t max_symbols, std::size_t guard) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_symbols; ++n) {
    const std::uint64_t c = CountProducible(source, n);
    total = total > kMax - c ? kMax : total + c;
  }
  if (total > guard)
    throw GuardExceeded("brute force would enumerate " + std::to_string(total) +
                        " sequences, over the guard of " +
                        std::to_string(guard));

  const auto words = code.AlignTo(source.alphabet());
  std::unordered_map<std::string, SymbolSequence> seen;
  for (std::size_t n = 1; n <= max_symbols; ++n) {
    for (auto& seq : EnumerateProducible(source, n, guard)) {
      std::string encoded;
      for (SymbolId s : seq) encoded += words[s];
      auto [it, inserted] = seen.emplace(std::move(encoded), seq);
      if (!inserted) {
        DecodabilityVerdict v;
        v.decodable = false;
        v.witness = Ordered(it->second, std::move(seq));
        return v;
      }
    }
  }
  return DecodabilityVerdict{};
}

std::map<std::size_t, std::uint64_t> CountByCodeLength(
    const MooreMarkovSource& source, const AnyCode& code, std::size_t k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const ContextWords words = BindToSource(code, source);
  const std::size_t m = source.size();
  if (k == 0) return {{0, 1}};

  auto add = [&](std::uint64_t& into, std::uint64_t c) {
    if (into > kMax - c)
      throw GuardExceeded("sequence count overflows 64 bits at length " +
                          std::to_string(k));
    into += c;
  };

  // counts[s][r]: sequences so far ending in s with r code digits.
  std::vector<std::map<std::size_t, std::uint64_t>> counts(m);
  for (std::size_t s = 0; s < m; ++s)
    if (const auto& w = words.Start(static_cast<SymbolId>(s)))
      counts[s][w->size()] = 1;
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<std::map<std::size_t, std::uint64_t>> next(m);
    for (std::size_t prev = 0; prev < m; ++prev) {
      for (const auto& [r, c] : counts[prev]) {
        for (std::size_t s = 0; s < m; ++s) {
          const auto& w = words.After(static_cast<SymbolId>(prev),
                                      static_cast<SymbolId>(s));
          if (w) add(next[s][r + w->size()], c);
        }
      }
    }
    counts = std::move(next);
  }
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& per_symbol : counts)
    for (const auto& [r, c] : per_symbol) add(out[r], c);
  return out;
}

}  // namespace udec
