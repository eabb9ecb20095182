// Copyright 2026 The scp-bigstep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>

#include "doctest.h"
#include "scp/generator.h"
#include "scp/io.h"
#include "scp/solvers.h"
#include "test_util.h"

namespace scp {
namespace {

using testing::MakeInstance;

std::string ParseErrorText(const std::string& text, bool orlib = false) {
  try {
    if (orlib) {
      ParseOrlibScp(text);
    } else {
      ParseInstance(text);
    }
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("serialize native format") {
  CHECK(SerializeInstance(MakeInstance(3, {{0, 2}})) == "3 1\n2 0 2\n");
  CHECK(SerializeInstance(Instance(2, {ElementSet(2)})) == "2 1\n0\n");
  const std::string ex1 = SerializeInstance(testing::Example1());
  CHECK(ex1.rfind("10 5\n6 0 1 2 3 4 5\n", 0) == 0);
  std::size_t lines = 0;
  for (const char c : ex1) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 6);
}

TEST_CASE("parse native format") {
  const Instance inst = ParseInstance("3 1\n2 0 2\n");
  CHECK(inst.universe_size() == 3);
  CHECK(inst.set(0).elements() == std::vector<std::size_t>{0, 2});
  // Whitespace between tokens is free-form.
  CHECK(ParseInstance("  3\t1 \n\n 2   2\n 0") == MakeInstance(3, {{0, 2}}));
}

TEST_CASE("native parse errors carry line numbers") {
  CHECK(ParseErrorText("3 1\n2 0 5\n") == "element 5 out of range at line 2");
  CHECK(ParseErrorText("3 1\n2 1 1\n") == "duplicate element 1 at line 2");
  CHECK(ParseErrorText("3 2\n1 0\n") ==
        "truncated set list: expected 2 sets, found 1 at line 2");
  CHECK(ParseErrorText("3 1\n2 0\n").find("truncated set list") == 0);
  CHECK(ParseErrorText("x 1\n") == "malformed header 'x' at line 1");
  CHECK(ParseErrorText("").find("malformed header") == 0);
  CHECK(ParseErrorText("0 1\n0\n").find("universe size") == 0);
  CHECK(ParseErrorText("3 1\n1 0\n1 2\n") == "unexpected trailing token '1' at line 3");
  CHECK(ParseErrorText("3 1\n-1\n").find("malformed set size") == 0);
}

TEST_CASE("native round trip on generated instances") {
  GeneratorConfig config;
  config.policy = FeasibilityPolicy::kKeepRaw;
  std::mt19937 rng(3);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    config.n = 1 + rng() % 150;
    config.m = 1 + rng() % 35;
    config.q = (rng() % 11) / 10.0;
    const Instance inst = GenerateInstance(config, i);
    const std::string text = SerializeInstance(inst);
    REQUIRE(ParseInstance(text) == inst);
    REQUIRE(SerializeInstance(ParseInstance(text)) == text);
  }
}

TEST_CASE("OR-Library transposition") {
  const Instance inst = ParseOrlibScp("2 2\n1 1\n1 1\n2 1 2\n");
  CHECK(inst == MakeInstance(2, {{0, 1}, {1}}));

  std::vector<std::string> warnings;
  ParseOrlibScp("2 2\n1 1\n1 1\n2 1 2\n", &warnings);
  CHECK(warnings.empty());
  ParseOrlibScp("2 2\n3 1\n1 1\n2 1 2\n", &warnings);
  CHECK(warnings.size() == 1);
}

TEST_CASE("OR-Library errors") {
  CHECK(ParseErrorText("0 5\n", true) == "zero rows at line 1");
  CHECK(ParseErrorText("2 0\n", true) == "zero columns at line 1");
  CHECK(ParseErrorText("2 2\n1\n", true).find("truncated cost section") == 0);
  CHECK(ParseErrorText("2 2\n1 1\n1 1\n", true).find("truncated row section") == 0);
  CHECK(ParseErrorText("2 2\n1 1\n1 3\n1 1\n", true) ==
        "column index 3 out of bounds at line 3");
  CHECK(ParseErrorText("2 2\n1 1\n1 0\n1 1\n", true) ==
        "column index 0 out of bounds at line 3");
}

TEST_CASE("OR-Library files solve to valid covers") {
  // Costs and row lists wrapped across lines the way the published files are.
  const std::string text =
      "5 4\n"
      " 1 2 1\n 3\n"
      "2\n 1 2\n"
      "1\n 2\n"
      "2 3\n 4\n"
      "1 4\n"
      "3 1 3 4\n";
  std::vector<std::string> warnings;
  const Instance inst = ParseOrlibScp(text, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(inst.universe_size() == 5);
  CHECK(inst.set_count() == 4);
  CHECK(IsFeasible(inst));
  CHECK(ValidateCover(inst, ClassicalGreedy(inst).cover));
  CHECK(ValidateCover(inst, BigStepGreedy(inst, StepSize(2)).cover));

  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 30;
    const std::size_t cols = 1 + rng() % 10;
    std::string file = std::to_string(rows) + " " + std::to_string(cols) + "\n";
    for (std::size_t c = 0; c < cols; ++c) file += "1 ";
    file += "\n";
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::size_t> covering;
      for (std::size_t c = 1; c <= cols; ++c) {
        if (rng() % 3 == 0) covering.push_back(c);
      }
      if (covering.empty()) covering.push_back(1 + rng() % cols);
      file += std::to_string(covering.size());
      for (const auto c : covering) file += " " + std::to_string(c);
      file += "\n";
    }
    const Instance parsed = ParseOrlibScp(file);
    CHECK(parsed.universe_size() == rows);
    CHECK(parsed.set_count() == cols);
    CHECK(ValidateCover(parsed, ClassicalGreedy(parsed).cover));
  }
}

TEST_CASE("campaign spec JSON") {
  const CampaignSpec spec = ParseCampaignSpec(
      R"({"n": 50, "q": 0.4, "m": [10, 20], "p": 3, "count": 17, "seed": 9,
          "policy": "raw"})");
  CHECK(spec.n == 50);
  CHECK(spec.q == 0.4);
  CHECK(spec.m_values == std::vector<std::size_t>{10, 20});
  CHECK(spec.p == 3);
  CHECK(spec.count == 17);
  CHECK(spec.seed == 9);
  CHECK(spec.policy == FeasibilityPolicy::kKeepRaw);

  const CampaignSpec defaults = ParseCampaignSpec(R"({"q": 0.3, "m": [10]})");
  CHECK(defaults.n == 100);
  CHECK(defaults.p == 2);
  CHECK(defaults.policy == FeasibilityPolicy::kRejectResample);

  CHECK_THROWS_AS(ParseCampaignSpec(R"({"q": 0.3})"), ParseError);
  CHECK_THROWS_AS(ParseCampaignSpec("[1]"), ParseError);
  CHECK_THROWS_AS(ParseCampaignSpec("{"), ParseError);
  CHECK_THROWS_AS(ParseCampaignSpec(R"({"q": 0.3, "m": []})"), ParseError);
  CHECK_THROWS_AS(ParseCampaignSpec(R"({"q": 0.3, "m": [5], "policy": "x"})"), ParseError);
}

}  // namespace
}  // namespace scp
