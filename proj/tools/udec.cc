// tools/udec.cc

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

// udec: command-line front end.
//
// Exit codes: 0 success (or decodable), 2 analysis negative (not decodable,
// necessary condition failed, ambiguous digit string), 1 input or internal
// error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "udec/capacity.h"
#include "udec/codebook.h"
#include "udec/decodability.h"
#include "udec/example.h"
#include "udec/io.h"
#include "udec/simulate.h"
#include "udec/source_model.h"

namespace {

using namespace udec;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;

void Print(const Json& j) { std::cout << j.dump(2) << "\n"; }

const Alphabet& AlphabetOf(const AnySource& source) {
  return std::visit(
      [](const auto& s) -> const Alphabet& { return s.alphabet(); }, source);
}

const MooreMarkovSource& RequireMoore(const AnySource& source,
                                      const std::string& command) {
  if (const auto* m = std::get_if<MooreMarkovSource>(&source)) return *m;
  throw InputError(command + " needs a Moore (kind \"moore\") source");
}

const Codebook& RequireCodebook(const AnyCode& code,
                                const std::string& command) {
  if (const auto* c = std::get_if<Codebook>(&code)) return *c;
  throw InputError(command + " needs a fixed codebook (kind \"codebook\")");
}

int Analyze(const std::string& source_path, const std::string& code_path) {
  const AnySource source = LoadSource(source_path);
  const AnyCode any_code = LoadCode(code_path);
  const Codebook& code = RequireCodebook(any_code, "analyze");
  const Alphabet& alphabet = AlphabetOf(source);
  std::vector<std::size_t> lengths = code.LengthsFor(alphabet);

  Json report;
  report["kraft_sum"] = ReportNumber(KraftSum(lengths, code.radix()));
  if (const auto* mealy = std::get_if<MealySource>(&source)) {
    const auto check = CheckNecessaryCondition(*mealy, code);
    report["rho"] = ReportNumber(check.rho);
    report["passes_necessary"] = check.passes;
    Print(report);
    return check.passes ? kOk : kNegative;
  }
  const auto& moore = std::get<MooreMarkovSource>(source);
  const auto check = CheckNecessaryCondition(moore, code);
  const auto verdict = TestUniqueDecodability(moore, code);
  report["rho"] = ReportNumber(check.rho);
  report["passes_necessary"] = check.passes;
  const Json verdict_json = VerdictToJson(verdict, alphabet);
  for (const auto& [k, v] : verdict_json.items()) report[k] = v;
  Print(report);
  return verdict.decodable ? kOk : kNegative;
}

int EncodeCommand(const std::string& source_path, const std::string& code_path,
                  const std::string& text) {
  const AnySource source = LoadSource(source_path);
  const AnyCode code = LoadCode(code_path);
  const Alphabet& alphabet = AlphabetOf(source);
  std::cout << Encode(code, alphabet, alphabet.Parse(text)) << "\n";
  return kOk;
}

int DecodeCommand(const std::string& source_path, const std::string& code_path,
                  const std::string& digits) {
  const AnySource any_source = LoadSource(source_path);
  const MooreMarkovSource& source = RequireMoore(any_source, "decode");
  const AnyCode code = LoadCode(code_path);
  try {
    std::cout << source.alphabet().Format(Decode(source, code, digits))
              << "\n";
    return kOk;
  } catch (const AmbiguousParseError& e) {
    Json j;
    j["error"] = "ambiguous";
    j["digits"] = digits;
    j["parses"] = Json::array({source.alphabet().Names(e.first()),
                               source.alphabet().Names(e.second())});
    Print(j);
    std::cerr << "udec: " << e.what() << "\n";
    return kNegative;
  }
}

int ReproduceTable(std::size_t n_max, const std::string& out_path) {
  const std::string csv = example::RedundancyCsv(example::RedundancyTable(n_max));
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError(out_path + ": cannot open for writing");
  out << csv;
  out.close();
  if (!out) throw InputError(out_path + ": write failed");
  return kOk;
}

int SimulateCommand(const std::string& source_path,
                    const std::string& code_path, std::size_t n,
                    std::size_t trials, std::uint64_t seed) {
  const AnySource any_source = LoadSource(source_path);
  const MooreMarkovSource& source = RequireMoore(any_source, "simulate");
  const AnyCode code = LoadCode(code_path);
  const SimulationResult r = Simulate(source, code, n, trials, seed);
  Json j;
  j["empirical_mean"] = ReportNumber(r.empirical_mean);
  j["std_error"] = r.std_error ? Json(ReportNumber(*r.std_error)) : Json();
  j["exact"] = ReportNumber(r.exact);
  Print(j);
  return kOk;
}

int CapacityCommand(const std::string& channel_path) {
  const CapacityResult r = Capacity(LoadChannel(channel_path));
  Json j;
  j["root"] = ReportNumber(r.root);
  j["capacity_bits"] = ReportNumber(r.capacity_bits);
  if (r.determinant_residual)
    j["determinant_residual"] = ReportNumber(*r.determinant_residual);
  Print(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"udec: unique decodability of codes for constrained sources"};
  app.require_subcommand(1);

  std::string source_path, code_path, text, digits, out_path, channel_path;
  std::size_t n = 16, trials = 100000;
  std::uint64_t seed = 42;

  auto* analyze = app.add_subcommand(
      "analyze", "Kraft sum, spectral condition and decodability verdict");
  analyze->add_option("--source", source_path, "source JSON")->required();
  analyze->add_option("--code", code_path, "codebook JSON")->required();

  auto* encode = app.add_subcommand("encode", "encode a symbol sequence");
  encode->add_option("--source", source_path, "source JSON")->required();
  encode->add_option("--code", code_path, "code JSON")->required();
  encode->add_option("--text", text,
                     "symbols, e.g. ACD or 'A C D' for longer names")
      ->required();

  auto* decode = app.add_subcommand("decode", "decode a digit string");
  decode->add_option("--source", source_path, "source JSON")->required();
  decode->add_option("--code", code_path, "code JSON")->required();
  decode->add_option("--digits", digits, "digit string")->required();

  auto* reproduce = app.add_subcommand(
      "reproduce-paper",
      "entropy vs. expected code length table for the built-in example");
  reproduce->add_option("--n", n, "largest sequence length")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--out", out_path, "CSV path (stdout if omitted)");

  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo estimate of the expected code length");
  simulate->add_option("--source", source_path, "source JSON")->required();
  simulate->add_option("--code", code_path, "code JSON")->required();
  simulate->add_option("--n", n, "symbols per trajectory")->required();
  simulate->add_option("--trials", trials, "number of trajectories")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "master seed");

  auto* capacity = app.add_subcommand("capacity", "noiseless channel capacity");
  capacity->add_option("--channel", channel_path, "channel JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return Analyze(source_path, code_path);
    if (*encode) return EncodeCommand(source_path, code_path, text);
    if (*decode) return DecodeCommand(source_path, code_path, digits);
    if (*reproduce) return ReproduceTable(n, out_path);
    if (*simulate)
      return SimulateCommand(source_path, code_path, n, trials, seed);
    if (*capacity) return CapacityCommand(channel_path);
  } catch (const std::exception& e) {
    std::cerr << "udec: error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
