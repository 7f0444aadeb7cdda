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

#include "actccg/reasoner.hpp"

#include <algorithm>

#include "actccg/corpus_io.hpp"
#include "actccg/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace actccg {
namespace {

Literal L(const char* text) { return ParseLiteral(text); }

std::vector<AxiomRule> Axioms() { return LoadAxioms(ACTCCG_DATA_DIR "/axioms.rules"); }

const AxiomRule& Named(const std::vector<AxiomRule>& rules, const std::string& name) {
  return *std::find_if(rules.begin(), rules.end(), [&](const AxiomRule& r) { return r.name == name; });
}

FactBase Facts(std::initializer_list<const char*> lits) {
  FactBase kb;
  for (const char* l : lits) kb.Insert(L(l), Origin::kObserved);
  return kb;
}

std::vector<std::string> Strings(const std::vector<Literal>& lits) {
  std::vector<std::string> out;
  for (const Literal& l : lits) out.push_back(ToString(l));
  return out;
}

TEST_CASE("literal syntax") {
  Literal l = L("!connected(cup,bucket)");
  CHECK_FALSE(l.positive);
  CHECK(l.predicate == "connected");
  CHECK(l.args == std::vector<std::string>{"cup", "bucket"});
  CHECK(ToString(l) == "!connected(cup,bucket)");
  CHECK(ToString(L(" moved( cup ) ")) == "moved(cup)");
  CHECK_THROWS_AS(L("moved(cup"), SyntaxError);
  CHECK_THROWS_AS(L("moved()"), SyntaxError);
}

TEST_CASE("fact base") {
  FactBase kb;
  CHECK(kb.Insert(L("connected(cup,bucket)"), Origin::kObserved));
  CHECK_FALSE(kb.Insert(L("connected(cup,bucket)"), Origin::kObserved));
  CHECK(kb.Insert(L("!connected(cup,bucket)"), Origin::kObserved));
  CHECK(kb.Contains(L("!connected(cup,bucket)")));
  CHECK_FALSE(kb.Contains(L("connected(cup,bucket)")));
  CHECK(Strings(kb.retracted()) == std::vector<std::string>{"connected(cup,bucket)"});
  CHECK(kb.size() == 1);
  try {
    kb.Insert(L("connected(cup)"), Origin::kObserved);
    FAIL("expected arity mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kArityMismatch);
  }
}

TEST_CASE("asserting events") {
  SUBCASE("consequences are added after the action") {
    FactBase kb = AssertEvent(ParseTerm("hiding(bucket,ball) -> contained(bucket,ball) & moved(bucket)"), {});
    CHECK(Strings(kb.Literals()) ==
          std::vector<std::string>{"hiding(bucket,ball)", "contained(bucket,ball)", "moved(bucket)"});
  }
  SUBCASE("an action without consequences") {
    FactBase kb = AssertEvent(ParseTerm("stirring(spoon,bucket)"), {});
    CHECK(Strings(kb.Literals()) == std::vector<std::string>{"stirring(spoon,bucket)"});
  }
  SUBCASE("a negative consequence retracts") {
    FactBase kb = Facts({"connected(cup,bucket)"});
    kb = AssertEvent(ParseTerm("take_down(cup,bucket) -> !connected(cup,bucket) & moved(cup)"), kb);
    CHECK(Strings(kb.Literals()) ==
          std::vector<std::string>{"take_down(cup,bucket)", "!connected(cup,bucket)", "moved(cup)"});
    CHECK(Strings(kb.retracted()) == std::vector<std::string>{"connected(cup,bucket)"});
  }
  SUBCASE("malformed events") {
    for (const char* bad : {"cut(x,cup)", "\\x. cut(x,cup)", "cut(a,b) | moved(a)",
                            "forall x. moved(x)", "cut(a,b) -> (moved(a) | moved(b))"}) {
      CAPTURE(bad);
      try {
        AssertEvent(ParseTerm(bad), {});
        FAIL("expected malformed event");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kMalformedEvent);
      }
    }
  }
}

TEST_CASE("axiom syntax") {
  AxiomRule a1 = ParseAxiom("axiom a1: contained(Y,X) & on_top(Z,Y) => on_top(Z,X)");
  CHECK(a1.name == "a1");
  REQUIRE(a1.body.size() == 2);
  CHECK(a1.body[0].predicate == "contained");
  CHECK(a1.body[0].args[0] == PatternArg{true, "Y"});
  CHECK(a1.head.predicate == "on_top");
  CHECK(ToString(a1) == "axiom a1: contained(Y,X) & on_top(Z,Y) => on_top(Z,X)");

  AxiomRule a3 = ParseAxiom("axiom a3: contained(Y,X) & divided(Y) => divided(X)");
  CHECK(a3.body[1].args == std::vector<PatternArg>{{true, "Y"}});

  AxiomRule ground = ParseAxiom("axiom g: holds(Hand,X) => moved(hand)");
  CHECK(ground.head.args[0] == PatternArg{false, "hand"});

  try {
    ParseAxiom("axiom bad: p(X) => q(X,W)");
    FAIL("expected range restriction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRangeRestriction);
  }
  for (const char* bad : {"axiom : p(X) => q(X)", "axiom a p(X) => q(X)", "axiom a: => q(a)",
                          "axiom a: !p(X) => q(X)", "axiom a: p(X) =>", "rule a: p(X) => q(X)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseAxiom(bad), Error);
  }
}

TEST_CASE("forward chaining") {
  std::vector<AxiomRule> axioms = Axioms();
  SUBCASE("stacking through a container") {
    FactBase kb = Facts({"contained(object_009,object_008)", "on_top(object_007,object_009)"});
    FactBase out = ForwardChain(kb, {Named(axioms, "a1")});
    CHECK(Strings(Report(kb, out).deduced) == std::vector<std::string>{"on_top(object_007,object_008)"});
    CHECK(out.facts().back().origin == Origin::kDeduced);
  }
  SUBCASE("division spreads to contents") {
    FactBase kb = Facts({"contained(ham,bread)", "divided(ham)"});
    FactBase out = ForwardChain(kb, {Named(axioms, "a3")});
    CHECK(Strings(Report(kb, out).deduced) == std::vector<std::string>{"divided(bread)"});
  }
  SUBCASE("empty input") { CHECK(ForwardChain(FactBase{}, axioms).empty()); }
  SUBCASE("transitive containment chains") {
    FactBase kb = Facts({"contained(a,b)", "contained(b,c)", "contained(c,d)", "divided(a)"});
    FactBase out = ForwardChain(kb, axioms);
    for (const char* l : {"contained(a,c)", "contained(a,d)", "contained(b,d)", "divided(b)",
                          "divided(c)", "divided(d)"}) {
      CAPTURE(l);
      CHECK(out.Contains(L(l)));
    }
    std::vector<Literal> facts;
    for (const auto& f : kb.facts()) facts.push_back(f.literal);
    std::vector<Literal> lits = out.Literals();
    CHECK(std::set<Literal>(lits.begin(), lits.end()) == testing::NaiveForwardChain(facts, axioms));
  }
  SUBCASE("recorded negation blocks a deduction") {
    FactBase kb = Facts({"contained(ham,bread)", "divided(ham)", "!divided(bread)"});
    FactBase out = ForwardChain(kb, axioms);
    CHECK(out.Contains(L("!divided(bread)")));
    CHECK_FALSE(out.Contains(L("divided(bread)")));
  }
  SUBCASE("the cap is enforced") {
    std::vector<AxiomRule> pair{ParseAxiom("axiom p: e(X,Y) & e(Y,Z) => e(X,Z)")};
    FactBase kb;
    for (int i = 0; i < 30; ++i) {
      kb.Insert(Literal{true, "e", {"n" + std::to_string(i), "n" + std::to_string(i + 1)}},
                Origin::kObserved);
    }
    try {
      ForwardChain(kb, pair, 50);
      FAIL("expected budget exceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBudgetExceeded);
    }
    CHECK(ForwardChain(kb, pair).size() == 30 * 31 / 2);
  }
}

TEST_CASE("consequence reports") {
  std::vector<AxiomRule> axioms = Axioms();
  SUBCASE("no change means no deductions") {
    FactBase kb = Facts({"moved(cup)"});
    ConsequenceReport r = Report(kb, kb);
    CHECK(r.deduced.empty());
    CHECK(Strings(r.observed) == std::vector<std::string>{"moved(cup)"});
  }
  SUBCASE("hiding then stacking yields one hidden placement") {
    FactBase kb = AssertEvent(ParseTerm("hiding(bucket,ball) -> contained(bucket,ball) & moved(bucket)"), {});
    kb = AssertEvent(ParseTerm("put_on_top(cup,bucket) -> on_top(cup,bucket) & moved(cup)"), kb);
    std::vector<AxiomRule> a1{Named(axioms, "a1")};
    ConsequenceReport r = Report(kb, ForwardChain(kb, a1));
    CHECK(Strings(r.deduced) == std::vector<std::string>{"on_top(cup,ball)"});

    std::vector<Literal> facts = kb.Literals();
    std::set<Literal> oracle = testing::NaiveForwardChain(facts, a1);
    CHECK(std::count_if(oracle.begin(), oracle.end(), [&](const Literal& l) {
            return l.predicate == "on_top" && !kb.Contains(l);
          }) == 1);
  }
  SUBCASE("rendering") {
    ConsequenceReport r{{L("moved(cup)")}, {L("on_top(cup,ball)")}, {L("connected(cup,bucket)")}};
    CHECK(RenderText(r) ==
          "observed (1):\n  moved(cup)\ndeduced (1):\n  on_top(cup,ball)\nretracted (1):\n"
          "  connected(cup,bucket)\n");
    CHECK(RenderTsv(r) ==
          "observed\tmoved(cup)\ndeduced\ton_top(cup,ball)\nretracted\tconnected(cup,bucket)\n");
  }
}

}  // namespace
}  // namespace actccg
