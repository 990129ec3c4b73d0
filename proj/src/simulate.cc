// src/simulate.cc

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

#include "udec/simulate.h"

#include <algorithm>
#include <cmath>

#include "udec/errors.h"

namespace udec {

std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SimulationResult Simulate(const MooreMarkovSource& source, const AnyCode& code,
                          std::size_t n, std::size_t trials,
                          std::uint64_t master_seed) {
  if (trials == 0) throw InputError("simulation needs at least one trial");
  const ContextWords words = BindToSource(code, source);

  // 128-bit accumulators keep the sums exact.
  unsigned __int128 sum = 0, sum_sq = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto seq = Sample(source, n, TrialSeed(master_seed, t));
    const auto len = static_cast<unsigned __int128>(EncodedLength(words, seq));
    sum += len;
    sum_sq += len * len;
  }

  SimulationResult r;
  r.n = n;
  r.trials = trials;
  const long double count = static_cast<long double>(trials);
  const long double mean = static_cast<long double>(sum) / count;
  r.empirical_mean = static_cast<double>(mean);
  if (trials > 1) {
    // Unbiased variance from exact integer moments.
    const long double centered =
        static_cast<long double>(sum_sq) -
        static_cast<long double>(sum) * static_cast<long double>(sum) / count;
    const long double variance = std::max(0.0L, centered / (count - 1.0L));
    r.std_error = static_cast<double>(std::sqrt(variance / count));
  }
  r.exact = ExpectedLength(code, source, n);
  return r;
}

}  // namespace udec
