// include/udec/example.h

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

#ifndef UDEC_EXAMPLE_H_
#define UDEC_EXAMPLE_H_

// The four-symbol constrained source used throughout the tests and by
// `udec reproduce-paper`.
//
//        A    B    C    D
//   A  1/2   0  1/2   0
//   B   0  1/2   0  1/2
//   C  1/4 1/4 1/4 1/4
//   D  1/4 1/4 1/4 1/4
//
// with a uniform first symbol, which is also the stationary law.  Its joint
// entropy is 2 + 1.5 (n - 1) bits.  The state-dependent "classic" code
// spends exactly that many bits on average.  The fixed "alternative" code
// A->0, B->1, C->01, D->10 violates Kraft's inequality (sum 1.5) yet is
// uniquely decodable for this source, because A is never followed by B and
// B never by A.  It averages 1.5 n bits: half a bit below the entropy for
// every n.

#include <cstddef>
#include <string>
#include <vector>

#include "udec/capacity.h"
#include "udec/codebook.h"
#include "udec/source_model.h"

namespace udec::example {

MooreMarkovSource ConstrainedSource();
/// Same alphabet, every transition 1/4: an unconstrained i.i.d. source.
MooreMarkovSource FullSupportSource();
Codebook AlternativeCode();
/// First symbol: A->00 B->01 C->10 D->11.  After A: A->0 C->1.  After B:
/// B->0 D->1.  After C or D: the same two-bit words as the first symbol.
StateDependentCode ClassicCode();
/// Compatibility graph of ConstrainedSource with the alternative code's
/// lengths as durations.
FiniteStateChannel ConstrainedChannel();

struct RedundancyRow {
  std::size_t n = 0;
  double entropy_bits = 0.0;
  double classic_expected = 0.0;
  double alternative_expected = 0.0;
  double gap = 0.0;  // entropy_bits - alternative_expected
};

/// Exact rows for n = 1 .. n_max.  Throws InputError if n_max is 0.
std::vector<RedundancyRow> RedundancyTable(std::size_t n_max);

/// CSV with header "n,entropy,classic,alternative,gap", 12 significant
/// digits, '.' decimal separator.
std::string RedundancyCsv(const std::vector<RedundancyRow>& rows);

}  // namespace udec::example

#endif  // UDEC_EXAMPLE_H_
