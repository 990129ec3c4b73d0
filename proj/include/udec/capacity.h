// include/udec/capacity.h

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

#ifndef UDEC_CAPACITY_H_
#define UDEC_CAPACITY_H_

// Capacity of discrete noiseless channels whose symbols have durations.
//
// Unconstrained channel with durations t_i: C = log2 X0, X0 the largest
// real root of sum_i X^{-t_i} = 1.
//
// Finite-state channel, b_ij^(s) the duration of the s-th symbol leading
// from state i to state j: C = log2 W0, W0 the largest real root of
// det(Q(W) - I) = 0 with Q(W)_ij = sum_s W^{-b_ij^(s)}.  For a strongly
// connected graph rho(Q(W)) is continuous and strictly decreasing in W, so
// W0 is the unique W >= 1 with rho(Q(W)) = 1, which is what we solve for.
//
// Reading codeword lengths as durations, "D-ary code lengths satisfy the
// Kraft-type condition" and "the channel has capacity at most log2 D" are
// the same statement.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "udec/codebook.h"
#include "udec/source_model.h"

namespace udec {

struct UnconstrainedChannel {
  std::vector<double> durations;
};

struct ChannelTransition {
  int from = 0;
  int to = 0;
  std::vector<double> durations;
};

struct FiniteStateChannel {
  std::vector<std::string> states;
  std::vector<ChannelTransition> transitions;
};

using ChannelSpec = std::variant<UnconstrainedChannel, FiniteStateChannel>;

struct CapacityResult {
  double root = 1.0;           // X0 or W0
  double capacity_bits = 0.0;  // log2(root)
  /// |det(Q(W0) - I)|, reported for finite-state channels whose durations
  /// are all integers.
  std::optional<double> determinant_residual;
};

/// Throws InputError on an empty list or a non-finite or non-positive
/// duration.  A single symbol gives root 1 and capacity 0.
CapacityResult UnconstrainedCapacity(const UnconstrainedChannel& channel,
                                     double tol = 1e-12);

/// Q(W)_ij = sum_s W^{-b_ij^(s)}.
Matrix ChannelMatrix(const FiniteStateChannel& channel, double w);

/// Throws InputError on bad durations or state indices or when there are no
/// transitions, and ReducibleError when the states incident to transitions
/// are not strongly connected.
CapacityResult FiniteStateCapacity(const FiniteStateChannel& channel,
                                   double tol = 1e-12);

CapacityResult Capacity(const ChannelSpec& channel, double tol = 1e-12);

/// Channel whose states are the source symbols, with a transition i -> j
/// carrying the single duration l_j whenever P(i, j) > 0.
FiniteStateChannel CompatibilityChannel(const MooreMarkovSource& source,
                                        const Codebook& code);

struct EquivalenceCheck {
  double rho = 0.0;       // rho(Q) of the source/code pair
  double capacity = 0.0;  // bits per unit duration
  bool consistent = false;
};

/// Computes rho = rho(Q(D)) and the capacity C of CompatibilityChannel, and
/// reports whether (rho <= 1 + 1e-9) agrees with (C <= log2 D + 1e-9).
/// Requires an irreducible source (ReducibleError otherwise).
EquivalenceCheck VerifyMcMillanCapacityEquivalence(
    const MooreMarkovSource& source, const Codebook& code);

}  // namespace udec

#endif  // UDEC_CAPACITY_H_
