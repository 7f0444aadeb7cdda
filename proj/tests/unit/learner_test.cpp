// Copyright 2026 The actccg Authors.
//
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

#include "actccg/learner.hpp"

#include <cmath>

#include "actccg/corpus_io.hpp"
#include "actccg/error.hpp"
#include "doctest.h"

namespace actccg {
namespace {

Term T(const char* text) { return ParseTerm(text); }

Lexicon Seed() { return LoadLexicon(ACTCCG_DATA_DIR "/seed.lex"); }

TrainingSample Sample(std::vector<std::string> tokens, const char* gold) {
  return TrainingSample{std::move(tokens), T(gold), 0};
}

double Sigmoid(double d) { return 1.0 / (1.0 + std::exp(-d)); }

TEST_CASE("induction abstracts subject and patient") {
  Lexicon seed = Seed();
  SUBCASE("take_down") {
    std::vector<LexEntry> entries = InduceEntries(
        Sample({"cup", "take_down", "bucket"}, "take_down(cup,bucket) -> !connected(cup,bucket) & moved(cup)"),
        seed);
    REQUIRE_FALSE(entries.empty());
    const LexEntry& general = entries.front();
    CHECK(general.token == "Take_down");
    CHECK(general.category == ActionCategory());
    CHECK(ToString(general.category) == "(AP\\NP)/NP");
    CHECK(AlphaEqual(general.semantics, T("\\x.\\y. take_down(x,y) -> !connected(x,y) & moved(x)")));
    CHECK(general.provenance == Provenance::kLearned);
  }
  SUBCASE("stirring") {
    std::vector<LexEntry> entries =
        InduceEntries(Sample({"spoon", "stirring", "bucket"}, "stirring(spoon,bucket)"), seed);
    REQUIRE_FALSE(entries.empty());
    CHECK(ToString(entries.front()) == "Stirring := (AP\\NP)/NP : \\x.\\y. stirring(x,y) @ 0.0");
  }
  SUBCASE("specific candidates can be switched off") {
    TrainingSample s = Sample({"cup", "take_down", "bucket"}, "take_down(cup,bucket) -> moved(cup)");
    CHECK(InduceEntries(s, seed, InductionOptions{false}).size() == 1);
    CHECK(InduceEntries(s, seed).size() > 1);
  }
  SUBCASE("every induced entry reproduces the gold form") {
    TrainingSample s = Sample({"bucket", "hiding", "ball"}, "hiding(bucket,ball) -> contained(bucket,ball) & moved(bucket)");
    for (const LexEntry& e : InduceEntries(s, seed)) {
      Lexicon lex = seed;
      lex.Add(e);
      bool found = false;
      for (const Derivation& d : ParseAll(s.tokens, lex)) {
        found = found || (d.features.size() == 3 && AlphaEqual(d.sign.semantics, s.gold));
      }
      CHECK(found);
    }
  }
  SUBCASE("unknown subject") {
    try {
      InduceEntries(Sample({"robot", "pushing", "box"}, "pushing(robot,box)"), seed);
      FAIL("expected induction failure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInductionFailure);
    }
  }
}

TEST_CASE("templates for unseen tokens") {
  Lexicon base = Seed();
  Lexicon lex = InjectTemplates({"Object_007", "Slicing", "Knife"}, base);
  REQUIRE(lex.Candidates("Object_007").size() == 1);
  CHECK(ToString(lex.entry(lex.Candidates("Object_007")[0])) == "Object_007 := N : object_007 @ 0.0");
  REQUIRE(lex.Candidates("Slicing").size() == 1);
  const LexEntry& slicing = lex.entry(lex.Candidates("Slicing")[0]);
  CHECK(ToString(slicing) == "Slicing := (AP\\NP)/NP : \\x.\\y. slicing(x,y) @ -1.0");
  CHECK(slicing.provenance == Provenance::kTemplate);
  CHECK(lex.Candidates("Knife").size() == base.Candidates("Knife").size());
  CHECK(lex.size() == base.size() + 2);

  ParseResult r = ArgmaxParse({"Object_014", "Slicing", "Object_011"},
                              InjectTemplates({"Object_014", "Slicing", "Object_011"}, base));
  CHECK(AlphaEqual(r.logical_form, T("slicing(object_014,object_011)")));
}

TEST_CASE("templates let a learned action reach unseen objects") {
  Lexicon lex = LoadLexicon(ACTCCG_DATA_DIR "/learned.lex");
  std::vector<std::string> words{"Object_014", "Chopping", "Object_011"};
  ParseResult r = ArgmaxParse(words, InjectTemplates(words, lex));
  CHECK(AlphaEqual(r.logical_form, T("chopping(object_014,object_011) -> divided(object_011)")));
}

// Two readings of Cut; the gold form only matches A. Every derivation uses the
// Knife and Cucumber entries once, so their gradients cancel and the only
// moving quantity is d = wA - wB, with d' = d + lr * N * 2 * (1 - sigmoid(d)).
TEST_CASE("training follows the two-reading recursion") {
  Lexicon lex;
  lex.Add(LexEntry{"Knife", ParseCategory("N"), T("knife"), 0.0});
  lex.Add(LexEntry{"Cucumber", ParseCategory("N"), T("cucumber"), 0.0});
  lex.Add(LexEntry{"Cut", ParseCategory("(AP\\NP)/NP"), T("\\x.\\y. cut(x,y) -> divided(y)"), 0.0});
  lex.Add(LexEntry{"Cut", ParseCategory("(AP\\NP)/NP"), T("\\x.\\y. cut(x,y)"), 0.0});
  const int n = 10;
  std::vector<TrainingSample> corpus(
      n, Sample({"Knife", "Cut", "Cucumber"}, "cut(knife,cucumber) -> divided(cucumber)"));

  TrainConfig cfg;
  TrainResult result = Train(corpus, lex, cfg);
  REQUIRE(result.history.size() == static_cast<std::size_t>(cfg.iterations) + 1);

  double d = 0.0;
  for (int t = 0; t <= cfg.iterations; ++t) {
    CAPTURE(t);
    CHECK(result.history[t] == doctest::Approx(n * std::log(Sigmoid(d))).epsilon(1e-9));
    d += cfg.learning_rate * n * 2.0 * (1.0 - Sigmoid(d));
  }
  double wa = result.lexicon.entry(2).weight;
  double wb = result.lexicon.entry(3).weight;
  CHECK(wa == doctest::Approx(-wb));
  CHECK(std::fabs(result.lexicon.entry(0).weight) < 1e-12);
  double p = ParseProbability(corpus[0].gold, corpus[0].tokens, result.lexicon);
  CHECK(p == doctest::Approx(Sigmoid(wa - wb)));
  CHECK(p > 0.9);
  CHECK(BestEntry(result.lexicon, "Cut") == EntryId{2});
}

TEST_CASE("single candidate converges to certainty") {
  Lexicon lex;
  lex.Add(LexEntry{"A", ParseCategory("NP"), T("a"), 0.0});
  lex.Add(LexEntry{"Go", ParseCategory("AP\\NP"), T("\\x. go(x)"), 0.0});
  std::vector<TrainingSample> corpus{Sample({"A", "Go"}, "go(a)")};
  TrainResult r = Train(corpus, lex, TrainConfig{});
  CHECK(ParseProbability(T("go(a)"), {"A", "Go"}, r.lexicon) == 1.0);
  CHECK(r.log_likelihood == doctest::Approx(0.0));
}

TEST_CASE("log-likelihood rises monotonically at small rates") {
  Lexicon lex = InduceLexicon(LoadCorpus(ACTCCG_DATA_DIR "/train120.corpus"), Seed());
  TrainConfig cfg;
  cfg.learning_rate = 0.01;
  cfg.iterations = 40;
  TrainResult r = Train(LoadCorpus(ACTCCG_DATA_DIR "/train120.corpus"), lex, cfg);
  REQUIRE(r.history.size() == 41);
  for (std::size_t t = 1; t < r.history.size(); ++t) {
    CAPTURE(t);
    CHECK(r.history[t] >= r.history[t - 1]);
  }
  CHECK(r.usable_samples == 120);
}

TEST_CASE("objective value and gradient") {
  Lexicon lex;
  lex.Add(LexEntry{"A", ParseCategory("NP"), T("a"), 0.0});
  lex.Add(LexEntry{"Go", ParseCategory("AP\\NP"), T("\\x. go(x)"), 0.0});
  lex.Add(LexEntry{"Go", ParseCategory("AP\\NP"), T("\\x. moved(x)"), 0.0});
  std::vector<TrainingSample> corpus{Sample({"A", "Go"}, "go(a)")};
  Objective objective(corpus, lex, 0.5);
  std::vector<double> w{0.2, 1.0, -1.0};
  double p = Sigmoid(2.0);
  CHECK(objective.Value(w) == doctest::Approx(std::log(p) - 0.25 * (0.04 + 1.0 + 1.0)));
  std::vector<double> g = objective.Gradient(w);
  CHECK(g[0] == doctest::Approx(-0.5 * 0.2));
  CHECK(g[1] == doctest::Approx((1.0 - p) - 0.5));
  CHECK(g[2] == doctest::Approx(-(1.0 - p) + 0.5));
}

TEST_CASE("training errors") {
  Lexicon lex = Seed();
  TrainConfig bad;
  bad.iterations = 0;
  CHECK_THROWS_AS(ValidateConfig(bad), Error);
  bad = TrainConfig{};
  bad.learning_rate = -1.0;
  CHECK_THROWS_AS(ValidateConfig(bad), Error);
  bad = TrainConfig{};
  bad.l2 = std::nan("");
  CHECK_THROWS_AS(ValidateConfig(bad), Error);

  Diagnostics diags;
  std::vector<TrainingSample> corpus{Sample({"knife", "knife", "knife"}, "moved(knife)")};
  try {
    Train(corpus, lex, TrainConfig{}, &diags);
    FAIL("expected degenerate corpus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateCorpus);
  }
}

}  // namespace
}  // namespace actccg
