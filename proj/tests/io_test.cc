// tests/io_test.cc

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

#include "udec/io.h"

#include <fstream>

#include "doctest.h"
#include "udec/errors.h"
#include "udec/example.h"

namespace udec {
namespace {

const std::string kDataDir = UDEC_DATA_DIR;

Json Parse(const std::string& text) { return ParseJsonText(text, "<test>"); }

TEST_CASE("malformed JSON reports line and column") {
  CHECK_THROWS_WITH_AS(Parse("{\n  \"kind\": \"moore\",\n  oops\n}"),
                       doctest::Contains("<test>:3:"), InputError);
  CHECK_THROWS_WITH_AS(Parse("[1, 2"), doctest::Contains("malformed JSON"),
                       InputError);
  CHECK_NOTHROW(Parse("{}"));
}

TEST_CASE("moore source round trip") {
  const auto source = example::ConstrainedSource();
  const Json j = ToJson(source);
  CHECK(j.dump() ==
        R"({"kind":"moore","alphabet":["A","B","C","D"],)"
        R"("transition":[[0.5,0.0,0.5,0.0],[0.0,0.5,0.0,0.5],)"
        R"([0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]],)"
        R"("initial":[0.25,0.25,0.25,0.25]})");
  const AnySource back = SourceFromJson(j);
  const auto& moore = std::get<MooreMarkovSource>(back);
  CHECK(moore.alphabet() == source.alphabet());
  CHECK(moore.transition() == source.transition());
  CHECK(moore.initial() == source.initial());
}

TEST_CASE("mealy source round trip") {
  const Json j = Parse(R"({"kind":"mealy","states":["S1","S2"],
      "alphabet":["a","b"],
      "transitions":[{"from":"S1","to":"S2","symbols":["a","b"]},
                     {"from":"S2","to":"S1","symbols":["a"]}],
      "initial_states":["S1"]})");
  const AnySource src = SourceFromJson(j);
  const auto& mealy = std::get<MealySource>(src);
  CHECK(mealy.outputs(0, 1) == std::vector<std::string>{"a", "b"});
  CHECK(mealy.outputs(1, 0) == std::vector<std::string>{"a"});
  CHECK(mealy.outputs(0, 0).empty());
  const AnySource again = SourceFromJson(ToJson(mealy));
  CHECK(std::get<MealySource>(again).outputs(0, 1) == mealy.outputs(0, 1));
}

TEST_CASE("source diagnostics carry a field path") {
  CHECK_THROWS_WITH_AS(SourceFromJson(Parse(R"({"alphabet":["A"]})")),
                       doctest::Contains("$.kind: missing field"), InputError);
  CHECK_THROWS_WITH_AS(SourceFromJson(Parse(R"({"kind":"hidden"})")),
                       doctest::Contains("unknown source kind"), InputError);
  CHECK_THROWS_WITH_AS(
      SourceFromJson(Parse(R"({"kind":"moore","alphabet":["A","B"],
          "transition":[[1,0],[0.5,"x"]],"initial":[1,0]})")),
      doctest::Contains("$.transition[1][1]"), InputError);
  CHECK_THROWS_WITH_AS(
      SourceFromJson(Parse(R"({"kind":"moore","alphabet":["A","B"],
          "transition":[[1,0],[0.5,0.4]],"initial":[1,0]})")),
      doctest::Contains("row 1"), InputError);
  CHECK_THROWS_WITH_AS(
      SourceFromJson(Parse(R"({"kind":"moore","alphabet":["A","A"],
          "transition":[[1,0],[0,1]],"initial":[1,0]})")),
      doctest::Contains("$.alphabet"), InputError);
  CHECK_THROWS_WITH_AS(
      SourceFromJson(Parse(R"({"kind":"mealy","states":["S1"],"alphabet":["a"],
          "transitions":[{"from":"S1","to":"S9","symbols":["a"]}],
          "initial_states":["S1"]})")),
      doctest::Contains("$.transitions[0].to"), InputError);
  CHECK_THROWS_WITH_AS(
      SourceFromJson(Parse(R"({"kind":"mealy","states":["S1"],"alphabet":["a"],
          "transitions":[{"from":"S1","to":"S1","symbols":["z"]}],
          "initial_states":["S1"]})")),
      doctest::Contains("'z'"), InputError);
}

TEST_CASE("code formats") {
  const AnyCode alt =
      CodeFromJson(Parse(R"({"kind":"codebook","radix":2,
          "words":{"A":"0","B":"1","C":"01","D":"10"}})"));
  CHECK(std::get<Codebook>(alt).words() == example::AlternativeCode().words());
  CHECK(ToJson(alt).dump() ==
        R"({"kind":"codebook","radix":2,"words":{"A":"0","B":"1","C":"01","D":"10"}})");

  const AnyCode classic = CodeFromJson(ToJson(example::ClassicCode()));
  CHECK(std::get<StateDependentCode>(classic).by_previous() ==
        example::ClassicCode().by_previous());

  CHECK_THROWS_WITH_AS(
      CodeFromJson(Parse(R"({"kind":"codebook","words":{"A":"0"}})")),
      doctest::Contains("$.radix: missing field"), InputError);
  CHECK_THROWS_WITH_AS(
      CodeFromJson(Parse(R"({"kind":"codebook","radix":2.5,"words":{"A":"0"}})")),
      doctest::Contains("$.radix"), InputError);
  CHECK_THROWS_WITH_AS(
      CodeFromJson(Parse(R"({"kind":"codebook","radix":2,"words":{"A":7}})")),
      doctest::Contains("$.words.A"), InputError);
  CHECK_THROWS_WITH_AS(
      CodeFromJson(Parse(R"({"kind":"codebook","radix":2,"words":{"A":"2"}})")),
      doctest::Contains("radix-2"), InputError);
  CHECK_THROWS_AS(
      CodeFromJson(Parse(R"({"kind":"state_dependent","radix":2,
          "initial":{"A":"0","B":"01"},"by_previous":{}})")),
      InputError);
}

TEST_CASE("channel formats") {
  const ChannelSpec golden =
      ChannelFromJson(Parse(R"({"kind":"unconstrained","durations":[1,2]})"));
  CHECK(std::get<UnconstrainedChannel>(golden).durations ==
        std::vector<double>{1, 2});

  const ChannelSpec by_index = ChannelFromJson(Parse(
      R"({"kind":"finite_state","states":["p","q"],
          "transitions":[{"from":0,"to":1,"durations":[1]},
                         {"from":"q","to":"p","durations":[1,2]}]})"));
  const auto& fs = std::get<FiniteStateChannel>(by_index);
  REQUIRE(fs.transitions.size() == 2);
  CHECK(fs.transitions[0].from == 0);
  CHECK(fs.transitions[0].to == 1);
  CHECK(fs.transitions[1].from == 1);
  CHECK(fs.transitions[1].durations == std::vector<double>{1, 2});

  CHECK_THROWS_WITH_AS(
      ChannelFromJson(Parse(R"({"kind":"finite_state","states":["p"],
          "transitions":[{"from":3,"to":0,"durations":[1]}]})")),
      doctest::Contains("$.transitions[0].from"), InputError);
  CHECK_THROWS_WITH_AS(
      ChannelFromJson(Parse(R"({"kind":"wire"})")),
      doctest::Contains("unknown channel kind"), InputError);
}

TEST_CASE("bundled data files load") {
  const AnySource paper = LoadSource(kDataDir + "/constrained_source.json");
  CHECK(std::get<MooreMarkovSource>(paper).transition() ==
        example::ConstrainedSource().transition());
  const AnySource full = LoadSource(kDataDir + "/full_support_source.json");
  CHECK(std::get<MooreMarkovSource>(full).transition() ==
        example::FullSupportSource().transition());
  const AnyCode alt = LoadCode(kDataDir + "/alternative_code.json");
  CHECK(std::get<Codebook>(alt).words() == example::AlternativeCode().words());
  const AnyCode classic = LoadCode(kDataDir + "/classic_code.json");
  CHECK(std::get<StateDependentCode>(classic).initial() ==
        example::ClassicCode().initial());
  CHECK(std::get<StateDependentCode>(classic).by_previous() ==
        example::ClassicCode().by_previous());

  const ChannelSpec ch = LoadChannel(kDataDir + "/constrained_channel.json");
  const auto& fs = std::get<FiniteStateChannel>(ch);
  CHECK(ChannelMatrix(fs, 2.0) == ChannelMatrix(example::ConstrainedChannel(), 2.0));
  CHECK(std::holds_alternative<UnconstrainedChannel>(
      LoadChannel(kDataDir + "/channel_unit.json")));

  CHECK_THROWS_WITH_AS(LoadSource(kDataDir + "/missing.json"),
                       doctest::Contains("cannot open"), InputError);
  CHECK_THROWS_WITH_AS(LoadCode(kDataDir + "/constrained_source.json"),
                       doctest::Contains("constrained_source.json: $.radix"),
                       InputError);
}

TEST_CASE("report numbers") {
  CHECK(ReportNumber(0.1 + 0.2) == 0.3);
  CHECK(ReportNumber(1.0 - 1e-15) == 1.0);
  CHECK(ReportNumber(1.61803398874989) == 1.61803398875);
  CHECK(ReportNumber(0.0) == 0.0);
  CHECK(ReportNumber(-2.5) == -2.5);
}

TEST_CASE("verdict serialization") {
  const Alphabet a({"A", "B", "C", "D"});
  DecodabilityVerdict ok;
  CHECK(VerdictToJson(ok, a).dump() == R"({"decodable":true})");
  DecodabilityVerdict bad{false, std::make_pair(SymbolSequence{0, 1},
                                                SymbolSequence{2})};
  CHECK(VerdictToJson(bad, a).dump() ==
        R"({"decodable":false,"witness":[["A","B"],["C"]]})");
}

}  // namespace
}  // namespace udec
