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

#include "actccg/grammar.hpp"

#include <cmath>
#include <limits>

#include "actccg/error.hpp"
#include "doctest.h"

namespace actccg {
namespace {

Category C(const char* text) { return ParseCategory(text); }
Term T(const char* text) { return ParseTerm(text); }

TEST_CASE("category syntax") {
  CHECK(C("(AP\\NP)/NP") ==
        Category::Forward(Category::Backward(Category::Atomic(Atom::kAP), Category::Atomic(Atom::kNP)),
                          Category::Atomic(Atom::kNP)));
  CHECK(C("N") == Category::Atomic(Atom::kN));
  CHECK(C("NP\\NP") == Category::Backward(Category::Atomic(Atom::kNP), Category::Atomic(Atom::kNP)));
  CHECK(C(" ( AP \\ NP ) / NP ") == C("(AP\\NP)/NP"));
  // Slashes associate to the left.
  CHECK(C("AP\\NP/NP") == C("(AP\\NP)/NP"));
  CHECK(ToString(C("(AP\\NP)/NP")) == "(AP\\NP)/NP");
  CHECK(ToString(C("((AP\\NP)\\((AP\\NP)/NP))/N")) == "((AP\\NP)\\((AP\\NP)/NP))/N");
  CHECK(C("(AP\\NP)/NP").Arity() == 2);
  CHECK(C("(AP\\NP)/NP").LeftArity() == 1);
  for (const char* bad : {"", "S", "AP/", "(AP", "AP)", "AP//NP"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(C(bad), SyntaxError);
  }
}

TEST_CASE("functional application") {
  Sign cut{C("(AP\\NP)/NP"), T("\\x.\\y. cut(x,y) -> divided(y)")};
  Sign cucumber{C("NP"), T("cucumber")};
  Sign knife{C("NP"), T("knife")};

  std::optional<Sign> vp = Combine(cut, cucumber);
  REQUIRE(vp);
  CHECK(vp->category == C("AP\\NP"));
  CHECK(AlphaEqual(vp->semantics, T("\\x. cut(x,cucumber) -> divided(cucumber)")));

  std::optional<Sign> ap = Combine(knife, *vp);
  REQUIRE(ap);
  CHECK(ap->category == C("AP"));
  CHECK(ap->semantics.SameAs(T("cut(knife,cucumber) -> divided(cucumber)")));

  CHECK_FALSE(Combine(knife, cucumber));
  CHECK_FALSE(Combine(*vp, knife));
  CHECK_FALSE(Combine(Sign{C("N"), T("knife")}, *vp));
}

TEST_CASE("unary projection") {
  std::optional<Sign> np = UnaryProject(Sign{C("N"), T("knife")});
  REQUIRE(np);
  CHECK(np->category == C("NP"));
  CHECK(np->semantics.SameAs(T("knife")));
  CHECK_FALSE(UnaryProject(Sign{C("AP"), T("moved(cup)")}));
  CHECK_FALSE(UnaryProject(Sign{C("NP"), T("cup")}));
  std::optional<Sign> obj = UnaryProject(Sign{C("N"), T("object_014")});
  REQUIRE(obj);
  CHECK(obj->semantics.SameAs(T("object_014")));
}

TEST_CASE("entry validation") {
  CHECK_NOTHROW(ValidateEntry(LexEntry{"Cut", C("(AP\\NP)/NP"), T("\\x.\\y. cut(x,y)"), 0.0}));
  CHECK_THROWS_AS(ValidateEntry(LexEntry{"Cut", C("(AP\\NP)/NP"), T("\\x. cut(x,a)"), 0.0}), Error);
  CHECK_THROWS_AS(ValidateEntry(LexEntry{"Id", C("N"), T("(\\x. x) knife"), 0.0}), Error);
  CHECK_THROWS_AS(
      ValidateEntry(LexEntry{"Knife", C("N"), T("knife"), std::numeric_limits<double>::infinity()}),
      Error);
}

TEST_CASE("entry rendering") {
  LexEntry cut{"Cut", C("(AP\\NP)/NP"), T("\\x.\\y. cut(x,y) -> divided(y)"), 0.0};
  CHECK(ToString(cut) == "Cut := (AP\\NP)/NP : \\x.\\y. cut(x,y) -> divided(y) @ 0.0");
  CHECK(FormatWeight(-1.0) == "-1.0");
  CHECK(FormatWeight(0.1) == "0.1");
  CHECK(std::stod(FormatWeight(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("lexicon") {
  Lexicon lex;
  CHECK(lex.Add(LexEntry{"Knife", C("N"), T("knife"), 0.5}) == Lexicon::AddResult::kAdded);
  CHECK(lex.Add(LexEntry{"Cut", C("(AP\\NP)/NP"), T("\\x.\\y. cut(x,y)"), 0.0}) ==
        Lexicon::AddResult::kAdded);

  SUBCASE("lookup ignores case") {
    CHECK(lex.Candidates("knife").size() == 1);
    CHECK(lex.Candidates("KNIFE").size() == 1);
    CHECK(lex.Candidates("spoon").empty());
  }
  SUBCASE("alpha-equal duplicates merge keeping the higher weight") {
    CHECK(lex.Add(LexEntry{"Cut", C("(AP\\NP)/NP"), T("\\a.\\b. cut(a,b)"), -2.0}) ==
          Lexicon::AddResult::kMergedKeptExisting);
    CHECK(lex.Add(LexEntry{"Cut", C("(AP\\NP)/NP"), T("\\a.\\b. cut(a,b)"), 3.0}) ==
          Lexicon::AddResult::kMergedRaisedWeight);
    CHECK(lex.size() == 2);
    CHECK(lex.entry(1).weight == 3.0);
  }
  SUBCASE("a second reading is a new entry") {
    CHECK(lex.Add(LexEntry{"Cut", C("(AP\\NP)/NP"), T("\\x.\\y. cut(y,x)"), 0.0}) ==
          Lexicon::AddResult::kAdded);
    CHECK(lex.Candidates("Cut").size() == 2);
  }
  SUBCASE("predicate arity is fixed") {
    CHECK_THROWS_AS(lex.Add(LexEntry{"Cut2", C("AP\\NP"), T("\\x. cut(x)"), 0.0}), Error);
  }
  SUBCASE("weights") {
    lex.SetWeights(std::vector<double>{1.0, 2.0});
    CHECK(lex.Weights() == std::vector<double>{1.0, 2.0});
    CHECK_THROWS_AS(lex.SetWeights(std::vector<double>{1.0}), Error);
  }
  CHECK(lex.tokens() == std::vector<std::string>{"Knife", "Cut"});
}

}  // namespace
}  // namespace actccg
