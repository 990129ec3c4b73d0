// tests/decodability_test.cc

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

#include "udec/decodability.h"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "test_util.h"
#include "udec/example.h"

namespace udec {
namespace {

using testing::DenseSpectralRadius;

const SymbolSequence kAB{0, 1};
const SymbolSequence kC{2};

MooreMarkovSource WithSupport(const std::vector<std::vector<int>>& support,
                              std::vector<double> mu) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : support) {
    double total = 0.0;
    for (int x : r) total += x;
    std::vector<double> row;
    for (int x : r) row.push_back(x / total);
    rows.push_back(row);
  }
  return MooreMarkovSource(Alphabet(testing::LetterNames(support.size())),
                           Matrix::FromRows(rows), std::move(mu));
}

Matrix RandomNonnegative(std::mt19937_64& rng, std::size_t n, double zero_p) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::bernoulli_distribution zero(zero_p);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = zero(rng) ? 0.0 : u(rng);
  return m;
}

TEST_CASE("Q matrix of the example pair") {
  const QMatrix q =
      BuildQMoore(example::ConstrainedSource(), example::AlternativeCode());
  CHECK(q.form == QMatrix::Form::kMoore);
  CHECK(q.radix == 2);
  CHECK(q.entries == Matrix::FromRows({{0.5, 0, 0.25, 0},
                                       {0, 0.5, 0, 0.25},
                                       {0.5, 0.5, 0.25, 0.25},
                                       {0.5, 0.5, 0.25, 0.25}}));
}

TEST_CASE("Q matrix special supports") {
  const Codebook alt = example::AlternativeCode();
  const QMatrix full = BuildQMoore(example::FullSupportSource(), alt);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(full.entries.ToRows()[i] == std::vector<double>{0.5, 0.5, 0.25, 0.25});
  const MooreMarkovSource identity(Alphabet({"A", "B", "C", "D"}),
                                   Matrix::Identity(4), {0.25, 0.25, 0.25, 0.25});
  CHECK(BuildQMoore(identity, alt).entries ==
        Matrix::FromRows({{0.5, 0, 0, 0},
                          {0, 0.5, 0, 0},
                          {0, 0, 0.25, 0},
                          {0, 0, 0, 0.25}}));
  CHECK_THROWS_AS(
      BuildQMoore(example::ConstrainedSource(), Codebook(2, {{"A", "0"}})),
      InputError);
}

TEST_CASE("Mealy Q matrix") {
  const auto source = example::ConstrainedSource();
  const Codebook alt = example::AlternativeCode();
  const QMatrix mealy = BuildQMealy(ToMealy(source), alt);
  CHECK(mealy.form == QMatrix::Form::kMealy);
  CHECK(mealy.entries == BuildQMoore(source, alt).entries);

  const MealySource one_state({"S"}, Alphabet({"A", "B", "C", "D"}),
                              {{{"A", "B", "C", "D"}}}, {"S"});
  const QMatrix single = BuildQMealy(one_state, alt);
  CHECK(single.entries.rows() == 1);
  CHECK(single.entries(0, 0) == KraftSum(alt));

  const MealySource idle({"S1", "S2"}, Alphabet({"A"}), {{{}, {}}, {{}, {}}},
                         {"S1"});
  CHECK(BuildQMealy(idle, Codebook(2, {{"A", "0"}})).entries == Matrix(2, 2));
  CHECK(SpectralRadius(BuildQMealy(idle, Codebook(2, {{"A", "0"}}))) == 0.0);
}

TEST_CASE("spectral radius of the example pair is exactly at the boundary") {
  const QMatrix q =
      BuildQMoore(example::ConstrainedSource(), example::AlternativeCode());
  const double rho = SpectralRadius(q);
  CHECK(std::abs(rho - 1.0) <= 1e-10);
  CHECK(std::abs(rho - DenseSpectralRadius(q.entries)) <= 1e-9);
  // Analytic right eigenvector (1, 1, 2, 2) with eigenvalue 1.
  const std::vector<double> v{1, 1, 2, 2};
  CHECK(RightMultiply(q.entries, v) == v);
}

TEST_CASE("spectral radius special cases and errors") {
  CHECK(SpectralRadius(Matrix(3, 3)) == 0.0);
  CHECK(SpectralRadius(Matrix(0, 0)) == 0.0);
  CHECK(SpectralRadius(Matrix::FromRows({{0.7}})) == 0.7);
  // Periodic: eigenvalues +-1.
  CHECK(std::abs(SpectralRadius(Matrix::FromRows({{0, 1}, {1, 0}})) - 1.0) <=
        1e-10);
  // Reducible: the larger diagonal block wins.
  CHECK(std::abs(SpectralRadius(Matrix::FromRows({{0.5, 1}, {0, 0.9}})) - 0.9) <=
        1e-10);
  // Nilpotent.
  CHECK(SpectralRadius(Matrix::FromRows({{0, 1}, {0, 0}})) == 0.0);
  const Matrix rows_equal = Matrix::FromRows({{0.5, 0.25, 0.125},
                                              {0.5, 0.25, 0.125},
                                              {0.5, 0.25, 0.125}});
  CHECK(std::abs(SpectralRadius(rows_equal) - 0.875) <= 1e-10);

  CHECK_THROWS_AS(SpectralRadius(Matrix::FromRows({{0.5, -0.1}, {0, 0}})),
                  InputError);
  CHECK_THROWS_AS(
      SpectralRadius(Matrix::FromRows(
          {{std::numeric_limits<double>::quiet_NaN()}})),
      InputError);
  CHECK_THROWS_AS(SpectralRadius(Matrix(2, 3)), InputError);
  try {
    SpectralRadius(Matrix::FromRows({{0.3, 0.7}, {0.6, 0.1}}), 1e-300, 3);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).find("[") != std::string::npos);
  }
}

TEST_CASE("spectral radius agrees with a dense eigen solve") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Matrix m = RandomNonnegative(rng, n, t % 3 == 0 ? 0.7 : 0.3);
    const double want = DenseSpectralRadius(m);
    CHECK(std::abs(SpectralRadius(m) - want) <= 1e-8 * std::max(1.0, want));
  }
}

TEST_CASE("spectral radius is monotone in the entries") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    Matrix m = RandomNonnegative(rng, n, 0.3);
    const double before = SpectralRadius(m);
    const std::size_t i = rng() % n, j = rng() % n;
    m(i, j) *= std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    CHECK(SpectralRadius(m) <= before + 1e-10);
  }
}

TEST_CASE("necessary condition") {
  const Codebook alt = example::AlternativeCode();
  const auto paper = CheckNecessaryCondition(example::ConstrainedSource(), alt);
  CHECK(std::abs(paper.rho - 1.0) <= 1e-10);
  CHECK(paper.passes);
  const auto full = CheckNecessaryCondition(example::FullSupportSource(), alt);
  CHECK(std::abs(full.rho - 1.5) <= 1e-10);
  CHECK_FALSE(full.passes);

  // Complete prefix-free words pass on any source.
  const Codebook two_bits(2, {{"A", "00"}, {"B", "01"}, {"C", "10"}, {"D", "11"}});
  for (const auto& inst : testing::RandomFamily(3, 50)) {
    if (inst.source.size() != 4) continue;
    CHECK(CheckNecessaryCondition(inst.source, two_bits).passes);
  }

  // Mealy form.
  const auto mealy = CheckNecessaryCondition(ToMealy(example::FullSupportSource()), alt);
  CHECK(std::abs(mealy.rho - 1.5) <= 1e-10);
  CHECK_FALSE(mealy.passes);
}

TEST_CASE("necessary condition ignores symbols the source never reaches") {
  // Starting in A the source repeats A forever.  B, C, D form an
  // unreachable, fully connected block whose Q has rho = 1.5.  Only "A..A"
  // sequences are producible, so the code is decodable for this source.
  const auto source = WithSupport(
      {{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}}, {1, 0, 0, 0});
  const Codebook code(2, {{"A", "0"}, {"B", "0"}, {"C", "1"}, {"D", "1"}});
  const auto check = CheckNecessaryCondition(source, code);
  CHECK(std::abs(check.rho - 0.5) <= 1e-10);
  CHECK(check.passes);
  CHECK(std::abs(SpectralRadius(BuildQMoore(source, code)) - 1.5) <= 1e-10);
  CHECK(TestUniqueDecodability(source, code).decodable);
  CHECK(BruteForceUniqueDecodability(source, code, 8).decodable);
}

TEST_CASE("exact decodability test on the example") {
  const Codebook alt = example::AlternativeCode();
  CHECK(TestUniqueDecodability(example::ConstrainedSource(), alt).decodable);
  const auto v = TestUniqueDecodability(example::FullSupportSource(), alt);
  CHECK_FALSE(v.decodable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == kAB);
  CHECK(v.witness->second == kC);
}

TEST_CASE("prefix-free codes are decodable for every source") {
  const Codebook prefix(2, {{"A", "0"}, {"B", "10"}, {"C", "110"}, {"D", "111"}});
  CHECK(TestUniqueDecodability(example::FullSupportSource(), prefix).decodable);
  for (const auto& inst : testing::RandomFamily(41, 80)) {
    const std::size_t m = inst.source.size();
    // Fixed-length words are prefix-free.
    std::map<std::string, std::string> words;
    const auto names = testing::LetterNames(m);
    for (std::size_t i = 0; i < m; ++i)
      words[names[i]] = std::string(1, static_cast<char>('0' + (i >> 1))) +
                        static_cast<char>('0' + (i & 1));
    CHECK(TestUniqueDecodability(inst.source, Codebook(2, words)).decodable);
  }
}

TEST_CASE("agreement with brute force on the random family") {
  for (const auto& inst : testing::RandomFamily(2024, 120)) {
    const std::string problem = testing::DisagreementWithBruteForce(inst, 6);
    INFO(problem);
    CHECK(problem.empty());
  }
}

TEST_CASE("brute force oracle") {
  const Codebook alt = example::AlternativeCode();
  CHECK(BruteForceUniqueDecodability(example::ConstrainedSource(), alt, 8)
            .decodable);
  const auto v =
      BruteForceUniqueDecodability(example::FullSupportSource(), alt, 2);
  CHECK_FALSE(v.decodable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == kAB);
  CHECK(v.witness->second == kC);
  // Injective fixed-length code.
  const Codebook fixed(2, {{"A", "00"}, {"B", "01"}, {"C", "10"}, {"D", "11"}});
  CHECK(BruteForceUniqueDecodability(example::FullSupportSource(), fixed, 6)
            .decodable);
  CHECK_THROWS_AS(
      BruteForceUniqueDecodability(example::FullSupportSource(), fixed, 12, 1000),
      GuardExceeded);
}

TEST_CASE("count by code length") {
  const auto source = example::ConstrainedSource();
  const AnyCode alt = example::AlternativeCode();
  CHECK(CountByCodeLength(source, alt, 1) ==
        std::map<std::size_t, std::uint64_t>{{1, 2}, {2, 2}});
  std::uint64_t total = 0;
  for (auto [r, n] : CountByCodeLength(source, alt, 2)) total += n;
  CHECK(total == 12);
  // The counting bound behind the necessary condition: at most D^r
  // sequences share code length r.
  for (std::size_t k = 1; k <= 24; ++k)
    for (auto [r, n] : CountByCodeLength(source, alt, k))
      CHECK(n <= (std::uint64_t{1} << r));
  CHECK(CountByCodeLength(source, alt, 0) ==
        std::map<std::size_t, std::uint64_t>{{0, 1}});
  CHECK_THROWS_AS(
      CountByCodeLength(example::FullSupportSource(), alt, 40), GuardExceeded);
}

TEST_CASE("count by code length matches enumeration") {
  for (const auto& inst : testing::RandomFamily(77, 50)) {
    const AnyCode code = inst.code;
    for (std::size_t k = 1; k <= 4; ++k) {
      std::map<std::size_t, std::uint64_t> want;
      for (const auto& s : testing::FilterProducible(inst.source, k))
        ++want[testing::ConcatOracle(inst.code, inst.source.alphabet(), s).size()];
      CHECK(CountByCodeLength(inst.source, code, k) == want);
    }
  }
  const AnyCode classic = example::ClassicCode();
  const auto counts = CountByCodeLength(example::ConstrainedSource(), classic, 2);
  CHECK(counts == std::map<std::size_t, std::uint64_t>{{3, 4}, {4, 8}});
}

TEST_CASE("decode on the example") {
  const auto source = example::ConstrainedSource();
  const AnyCode alt = example::AlternativeCode();
  const Alphabet& a = source.alphabet();
  CHECK(a.Format(Decode(source, alt, "01")) == "C");
  CHECK(a.Format(Decode(source, alt, "00")) == "AA");
  CHECK(a.Format(Decode(source, alt, "0")) == "A");
  CHECK(a.Format(Decode(source, alt, "1")) == "B");
  CHECK(Decode(source, alt, "").empty());
  CHECK_THROWS_AS(Decode(source, alt, "0a"), InputError);

  const AnyCode classic = example::ClassicCode();
  CHECK(a.Format(Decode(source, classic, "001")) == "AC");
}

TEST_CASE("decode errors") {
  // A single symbol with word "00": an odd number of digits cannot parse.
  const MooreMarkovSource one(Alphabet({"A"}), Matrix::FromRows({{1.0}}), {1.0});
  const AnyCode code = Codebook(2, {{"A", "00"}});
  CHECK(Decode(one, code, "0000") == SymbolSequence{0, 0});
  CHECK_THROWS_AS(Decode(one, code, "000"), NoParseError);
  CHECK_THROWS_AS(Decode(one, code, "1"), NoParseError);

  // The source constraint matters: "01" parses as AB only without it.
  try {
    Decode(example::FullSupportSource(), AnyCode(example::AlternativeCode()),
           "01");
    FAIL("expected AmbiguousParseError");
  } catch (const AmbiguousParseError& e) {
    CHECK(e.first() == kAB);
    CHECK(e.second() == kC);
  }
}

TEST_CASE("decode inverts encode") {
  const auto source = example::ConstrainedSource();
  const AnyCode codes[] = {example::AlternativeCode(), example::ClassicCode()};
  for (const AnyCode& code : codes) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto seq = Sample(source, seed % 65, seed);
      CHECK(Decode(source, code, Encode(code, source.alphabet(), seq)) == seq);
    }
  }
}

TEST_CASE("decode finds ambiguity exactly when the exact test does") {
  for (const auto& inst : testing::RandomFamily(555, 60)) {
    const auto verdict = TestUniqueDecodability(inst.source, inst.code);
    if (verdict.decodable) continue;
    const AnyCode code = inst.code;
    const std::string digits =
        Encode(code, inst.source.alphabet(), verdict.witness->first);
    CHECK_THROWS_AS(Decode(inst.source, code, digits), AmbiguousParseError);
  }
}

TEST_CASE("the necessary condition is not sufficient") {
  // A deterministic three-cycle A -> B -> C -> A started anywhere, with
  // one-digit binary words.  rho(Q) = 1/2, yet three symbols cannot get
  // distinct one-digit words, so two single-symbol sequences collide.
  const auto cycle =
      WithSupport({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  const Codebook words(2, {{"A", "0"}, {"B", "1"}, {"C", "0"}});
  const auto check = CheckNecessaryCondition(cycle, words);
  CHECK(std::abs(check.rho - 0.5) <= 1e-10);
  CHECK(check.passes);
  const auto v = TestUniqueDecodability(cycle, words);
  CHECK_FALSE(v.decodable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == SymbolSequence{0});
  CHECK(v.witness->second == SymbolSequence{2});

  // Exhaustive search over two-symbol sources and binary words of length
  // at most 2: count the instances that pass the spectral test but are
  // ambiguous, and record the first one found.
  std::size_t found = 0;
  std::string first;
  const std::vector<std::string> all_words{"0", "1", "00", "01", "10", "11"};
  for (int pattern = 0; pattern < 16; ++pattern) {
    std::vector<std::vector<int>> support{{pattern & 1, (pattern >> 1) & 1},
                                          {(pattern >> 2) & 1, (pattern >> 3) & 1}};
    if (support[0][0] + support[0][1] == 0 || support[1][0] + support[1][1] == 0)
      continue;
    const auto source = WithSupport(support, {0.5, 0.5});
    for (const auto& wa : all_words) {
      for (const auto& wb : all_words) {
        const Codebook code(2, {{"A", wa}, {"B", wb}});
        if (!CheckNecessaryCondition(source, code).passes) continue;
        if (TestUniqueDecodability(source, code).decodable) continue;
        if (found++ == 0) {
          std::ostringstream os;
          os << "support " << pattern << ", A->" << wa << ", B->" << wb;
          first = os.str();
        }
      }
    }
  }
  MESSAGE("spectral test passes but code is ambiguous in " << found
                                                           << " cases; first: "
                                                           << first);
  CHECK(found > 0);
}

}  // namespace
}  // namespace udec
