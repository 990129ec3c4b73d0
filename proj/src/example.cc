// src/example.cc

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

#include "udec/example.h"

#include <cstdio>

#include "udec/errors.h"

namespace udec::example {

namespace {

Alphabet Letters() { return Alphabet({"A", "B", "C", "D"}); }

const std::vector<double> kUniform{0.25, 0.25, 0.25, 0.25};

}  // namespace

MooreMarkovSource ConstrainedSource() {
  return MooreMarkovSource(Letters(),
                           Matrix::FromRows({{0.5, 0.0, 0.5, 0.0},
                                             {0.0, 0.5, 0.0, 0.5},
                                             {0.25, 0.25, 0.25, 0.25},
                                             {0.25, 0.25, 0.25, 0.25}}),
                           kUniform);
}

MooreMarkovSource FullSupportSource() {
  return MooreMarkovSource(Letters(), Matrix(4, 4, 0.25), kUniform);
}

Codebook AlternativeCode() {
  return Codebook(2, {{"A", "0"}, {"B", "1"}, {"C", "01"}, {"D", "10"}});
}

StateDependentCode ClassicCode() {
  const std::map<std::string, std::string> two_bits{
      {"A", "00"}, {"B", "01"}, {"C", "10"}, {"D", "11"}};
  return StateDependentCode(2, two_bits,
                            {{"A", {{"A", "0"}, {"C", "1"}}},
                             {"B", {{"B", "0"}, {"D", "1"}}},
                             {"C", two_bits},
                             {"D", two_bits}});
}

FiniteStateChannel ConstrainedChannel() {
  return CompatibilityChannel(ConstrainedSource(), AlternativeCode());
}

std::vector<RedundancyRow> RedundancyTable(std::size_t n_max) {
  if (n_max == 0) throw InputError("table needs n_max >= 1");
  const auto source = ConstrainedSource();
  const auto classic = ClassicCode();
  const auto alternative = AlternativeCode();
  std::vector<RedundancyRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    RedundancyRow r;
    r.n = n;
    r.entropy_bits = JointEntropy(source, n);
    r.classic_expected = ExpectedLength(classic, source, n);
    r.alternative_expected = ExpectedLength(alternative, source, n);
    r.gap = r.entropy_bits - r.alternative_expected;
    rows.push_back(r);
  }
  return rows;
}

std::string RedundancyCsv(const std::vector<RedundancyRow>& rows) {
  std::string out = "n,entropy,classic,alternative,gap\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g,%.12g\n", r.n,
                  r.entropy_bits, r.classic_expected, r.alternative_expected,
                  r.gap);
    out += buf;
  }
  return out;
}

}  // namespace udec::example
