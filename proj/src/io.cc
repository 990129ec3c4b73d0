// src/io.cc

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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "udec/errors.h"

namespace udec {

namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const Json& Require(const Json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.is_object()) Fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(path + "." + key, "missing field");
  return *it;
}

std::string String(const Json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

double Number(const Json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  return j.get<double>();
}

int Integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  return j.get<int>();
}

const Json& Array(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  return j;
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<std::string> Strings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& arr = Array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(String(arr[i], Index(path, i)));
  return out;
}

std::vector<double> Numbers(const Json& j, const std::string& path) {
  std::vector<double> out;
  const Json& arr = Array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(Number(arr[i], Index(path, i)));
  return out;
}

std::map<std::string, std::string> StringMap(const Json& j,
                                             const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = String(v, path + "." + k);
  return out;
}

// Wraps constructor errors with the location of the object being built.
template <typename F>
auto At(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const InputError& e) {
    Fail(path, e.what());
  }
}

MooreMarkovSource MooreFromJson(const Json& j) {
  Alphabet alphabet =
      At("$.alphabet", [&] { return Alphabet(Strings(Require(j, "alphabet", "$"), "$.alphabet")); });
  const Json& rows = Array(Require(j, "transition", "$"), "$.transition");
  std::vector<std::vector<double>> p;
  for (std::size_t i = 0; i < rows.size(); ++i)
    p.push_back(Numbers(rows[i], Index("$.transition", i)));
  std::vector<double> initial = Numbers(Require(j, "initial", "$"), "$.initial");
  Matrix transition = At("$.transition", [&] { return Matrix::FromRows(p); });
  MooreMarkovSource source = At("$", [&] {
    return MooreMarkovSource(std::move(alphabet), std::move(transition),
                             std::move(initial));
  });
  At("$", [&] {
    ValidateOrThrow(source);
    return 0;
  });
  return source;
}

MealySource MealyFromJson(const Json& j) {
  const auto states = Strings(Require(j, "states", "$"), "$.states");
  Alphabet alphabet = At("$.alphabet", [&] {
    return Alphabet(Strings(Require(j, "alphabet", "$"), "$.alphabet"));
  });
  const std::size_t q = states.size();
  auto state_index = [&](const Json& v, const std::string& path) {
    const std::string name = String(v, path);
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) Fail(path, "unknown state '" + name + "'");
    return static_cast<std::size_t>(it - states.begin());
  };
  std::vector<std::vector<std::vector<std::string>>> outputs(
      q, std::vector<std::vector<std::string>>(q));
  const Json& trs = Array(Require(j, "transitions", "$"), "$.transitions");
  for (std::size_t t = 0; t < trs.size(); ++t) {
    const std::string path = Index("$.transitions", t);
    const std::size_t from = state_index(Require(trs[t], "from", path), path + ".from");
    const std::size_t to = state_index(Require(trs[t], "to", path), path + ".to");
    for (auto& s : Strings(Require(trs[t], "symbols", path), path + ".symbols"))
      outputs[from][to].push_back(std::move(s));
  }
  auto initial = Strings(Require(j, "initial_states", "$"), "$.initial_states");
  MealySource source(states, std::move(alphabet), std::move(outputs),
                     std::move(initial));
  At("$", [&] {
    ValidateOrThrow(source);
    return 0;
  });
  return source;
}

}  // namespace

Json ParseJsonText(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0,
                                                  text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(origin + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": malformed JSON (" + e.what() +
                     ")");
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseJsonText(buf.str(), path);
}

AnySource SourceFromJson(const Json& j) {
  const std::string kind = String(Require(j, "kind", "$"), "$.kind");
  if (kind == "moore") return MooreFromJson(j);
  if (kind == "mealy") return MealyFromJson(j);
  Fail("$.kind", "unknown source kind '" + kind + "'");
}

AnyCode CodeFromJson(const Json& j) {
  const std::string kind = String(Require(j, "kind", "$"), "$.kind");
  const int radix = Integer(Require(j, "radix", "$"), "$.radix");
  if (kind == "codebook") {
    auto words = StringMap(Require(j, "words", "$"), "$.words");
    return At("$", [&] { return Codebook(radix, std::move(words)); });
  }
  if (kind == "state_dependent") {
    auto initial = StringMap(Require(j, "initial", "$"), "$.initial");
    const Json& by = Require(j, "by_previous", "$");
    if (!by.is_object()) Fail("$.by_previous", "expected an object");
    std::map<std::string, std::map<std::string, std::string>> by_previous;
    for (const auto& [prev, row] : by.items())
      by_previous[prev] = StringMap(row, "$.by_previous." + prev);
    return At("$", [&] {
      return StateDependentCode(radix, std::move(initial),
                                std::move(by_previous));
    });
  }
  Fail("$.kind", "unknown code kind '" + kind + "'");
}

ChannelSpec ChannelFromJson(const Json& j) {
  const std::string kind = String(Require(j, "kind", "$"), "$.kind");
  if (kind == "unconstrained")
    return UnconstrainedChannel{
        Numbers(Require(j, "durations", "$"), "$.durations")};
  if (kind != "finite_state")
    Fail("$.kind", "unknown channel kind '" + kind + "'");
  FiniteStateChannel ch;
  ch.states = Strings(Require(j, "states", "$"), "$.states");
  auto state_ref = [&](const Json& v, const std::string& path) {
    if (v.is_string()) {
      const std::string name = v.get<std::string>();
      auto it = std::find(ch.states.begin(), ch.states.end(), name);
      if (it == ch.states.end()) Fail(path, "unknown state '" + name + "'");
      return static_cast<int>(it - ch.states.begin());
    }
    const int i = Integer(v, path);
    if (i < 0 || static_cast<std::size_t>(i) >= ch.states.size())
      Fail(path, "state index " + std::to_string(i) + " out of range");
    return i;
  };
  const Json& trs = Array(Require(j, "transitions", "$"), "$.transitions");
  for (std::size_t t = 0; t < trs.size(); ++t) {
    const std::string path = Index("$.transitions", t);
    ChannelTransition tr;
    tr.from = state_ref(Require(trs[t], "from", path), path + ".from");
    tr.to = state_ref(Require(trs[t], "to", path), path + ".to");
    tr.durations = Numbers(Require(trs[t], "durations", path), path + ".durations");
    ch.transitions.push_back(std::move(tr));
  }
  return ch;
}

AnySource LoadSource(const std::string& path) {
  const Json j = ReadJsonFile(path);
  try {
    return SourceFromJson(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

AnyCode LoadCode(const std::string& path) {
  const Json j = ReadJsonFile(path);
  try {
    return CodeFromJson(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ChannelSpec LoadChannel(const std::string& path) {
  const Json j = ReadJsonFile(path);
  try {
    return ChannelFromJson(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json ToJson(const MooreMarkovSource& source) {
  Json j;
  j["kind"] = "moore";
  j["alphabet"] = source.alphabet().symbols();
  j["transition"] = source.transition().ToRows();
  j["initial"] = source.initial();
  return j;
}

Json ToJson(const MealySource& source) {
  Json j;
  j["kind"] = "mealy";
  j["states"] = source.states();
  j["alphabet"] = source.alphabet().symbols();
  Json trs = Json::array();
  for (std::size_t i = 0; i < source.num_states(); ++i)
    for (std::size_t k = 0; k < source.num_states(); ++k)
      if (!source.outputs(i, k).empty())
        trs.push_back(Json{{"from", source.states()[i]},
                           {"to", source.states()[k]},
                           {"symbols", source.outputs(i, k)}});
  j["transitions"] = std::move(trs);
  j["initial_states"] = source.initial_states();
  return j;
}

Json ToJson(const Codebook& code) {
  Json j;
  j["kind"] = "codebook";
  j["radix"] = code.radix();
  j["words"] = Json::object();
  for (const auto& [s, w] : code.words()) j["words"][s] = w;
  return j;
}

Json ToJson(const StateDependentCode& code) {
  Json j;
  j["kind"] = "state_dependent";
  j["radix"] = code.radix();
  j["initial"] = Json::object();
  for (const auto& [s, w] : code.initial()) j["initial"][s] = w;
  j["by_previous"] = Json::object();
  for (const auto& [prev, row] : code.by_previous()) {
    j["by_previous"][prev] = Json::object();
    for (const auto& [s, w] : row) j["by_previous"][prev][s] = w;
  }
  return j;
}

Json ToJson(const AnyCode& code) {
  return std::visit([](const auto& c) { return ToJson(c); }, code);
}

double ReportNumber(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json VerdictToJson(const DecodabilityVerdict& verdict,
                   const Alphabet& alphabet) {
  Json j;
  j["decodable"] = verdict.decodable;
  if (verdict.witness)
    j["witness"] = Json::array({alphabet.Names(verdict.witness->first),
                                alphabet.Names(verdict.witness->second)});
  return j;
}

}  // namespace udec
