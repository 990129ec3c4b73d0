// include/udec/simulate.h

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

#ifndef UDEC_SIMULATE_H_
#define UDEC_SIMULATE_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "udec/codebook.h"
#include "udec/source_model.h"

namespace udec {

/// Seed of trial `index` under `master_seed`: the (index + 1)-th output of a
/// SplitMix64 stream started at master_seed, i.e.
///   z = master_seed + (index + 1) * 0x9e3779b97f4a7c15
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
/// Trial seeds are independent of how trials are scheduled.
std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t index);

struct SimulationResult {
  std::size_t n = 0;
  std::size_t trials = 0;
  double empirical_mean = 0.0;
  /// Sample standard deviation over sqrt(trials); absent for one trial.
  std::optional<double> std_error;
  double exact = 0.0;  // ExpectedLength(code, source, n)
};

/// Encoded length of `trials` sampled length-n trajectories.  Lengths are
/// integers, so the sums are exact and order independent.  Throws
/// InputError when trials is 0.
SimulationResult Simulate(const MooreMarkovSource& source, const AnyCode& code,
                          std::size_t n, std::size_t trials,
                          std::uint64_t master_seed);

}  // namespace udec

#endif  // UDEC_SIMULATE_H_
