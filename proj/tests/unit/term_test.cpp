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

#include "actccg/term.hpp"

#include "actccg/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace actccg {
namespace {

Term P(const char* text) { return ParseTerm(text); }

TEST_CASE("free variables") {
  CHECK(FreeVars(P("\\x. cut(x,cucumber)")).empty());
  CHECK(FreeVars(P("cut(knife,y)")) == std::set<std::string>{"y"});
  CHECK(FreeVars(P("forall x. tomato(x) & cut(knife,x) -> divided(x)")).empty());
}

TEST_CASE("substitution") {
  CHECK(Substitute(P("cut(x,y)"), "x", Term::Const("knife")).SameAs(P("cut(knife,y)")));

  SUBCASE("capture is avoided by renaming the binder") {
    Term out = Substitute(P("\\x. f(x,y)"), "y", Term::Var("x"));
    REQUIRE(out.kind() == TermKind::kLam);
    CHECK(out.name() != "x");
    CHECK(AlphaEqual(out, P("\\z. f(z,x)")));
    CHECK(FreeVars(out) == std::set<std::string>{"x"});
  }

  SUBCASE("derivation step agrees with the nameless oracle") {
    Term t = P("\\y. cut(x,y) -> divided(y)");
    Term out = Substitute(t, "x", Term::Const("knife"));
    CHECK(out.SameAs(P("\\y. cut(knife,y) -> divided(y)")));
    CHECK(testing::DeBruijn(out) == testing::DeBruijnSubstitute(t, "x", Term::Const("knife")));
  }

  SUBCASE("shadowed variable is left alone") {
    Term t = P("\\x. moved(x)");
    CHECK(Substitute(t, "x", Term::Const("cup")).SameAs(t));
  }
}

TEST_CASE("beta reduction") {
  CHECK(BetaReduce(P("(\\x.\\y. cut(x,y) -> divided(y)) knife cucumber"))
            .SameAs(P("cut(knife,cucumber) -> divided(cucumber)")));
  CHECK(BetaReduce(P("(\\x.x) knife")).SameAs(Term::Const("knife")));
  CHECK(AlphaEqual(BetaReduce(P("(\\f. forall x. f(x)) (\\z. tomato(z))")),
                   P("forall x. tomato(x)")));

  SUBCASE("constants absorb arguments") {
    Term t = Term::App(Term::App(Term::Const("cut"), Term::Const("knife")), Term::Const("cup"));
    CHECK(BetaReduce(t).SameAs(P("cut(knife,cup)")));
  }

  SUBCASE("omega exhausts the budget") {
    Term omega = P("(\\x. x(x)) (\\x. x(x))");
    try {
      BetaReduce(omega, 100);
      FAIL("expected non-termination");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNonTermination);
    }
  }

  CHECK(IsBetaNormal(P("cut(knife,cucumber)")));
  CHECK_FALSE(IsBetaNormal(P("(\\x.x) knife")));
}

TEST_CASE("alpha equivalence") {
  CHECK(AlphaEqual(P("\\x. cut(x,c)"), P("\\y. cut(y,c)")));
  CHECK_FALSE(AlphaEqual(P("\\x.\\y. cut(x,y)"), P("\\x.\\y. cut(y,x)")));
  CHECK(AlphaEqual(P("\\x.\\y. chopping(x,y) -> divided(y)"),
                   P("\\a.\\b. chopping(a,b) -> divided(b)")));
  CHECK_FALSE(AlphaEqual(P("\\x. cut(x,y)"), P("\\x. cut(x,z)")));
  CHECK(AlphaKey(P("\\p. moved(p)")) == AlphaKey(P("\\q. moved(q)")));
  CHECK(ToString(Canonicalize(P("\\p.\\q. on_top(p,q)"))) == "\\x.\\y. on_top(x,y)");
}

TEST_CASE("inverse lambda") {
  SUBCASE("constant argument") {
    Term result = P("cut(knife,cucumber) -> divided(cucumber)");
    InverseResult inv = InverseLambda(result, Term::Const("cucumber"));
    CHECK_FALSE(inv.vacuous);
    CHECK(AlphaEqual(inv.function, P("\\v. cut(knife,v) -> divided(v)")));
    CHECK(AlphaEqual(BetaReduce(Term::App(inv.function, Term::Const("cucumber"))), result));
  }
  SUBCASE("identity") {
    InverseResult inv = InverseLambda(Term::Const("knife"), Term::Const("knife"));
    CHECK(AlphaEqual(inv.function, P("\\v. v")));
  }
  SUBCASE("absent argument is vacuous") {
    InverseResult inv = InverseLambda(P("moved(box)"), Term::Const("hand"));
    CHECK(inv.vacuous);
    CHECK(AlphaEqual(inv.function, P("\\v. moved(box)")));
  }
  SUBCASE("parameter avoids existing names") {
    InverseResult inv = InverseLambda(P("\\v. cut(v,cup)"), Term::Const("cup"));
    CHECK(inv.function.name() != "v");
    CHECK(AlphaEqual(inv.function, P("\\a.\\b. cut(b,a)")));
  }
}

TEST_CASE("implication flattening") {
  CHECK(FlattenImplications(P("tomato(x) -> (cut(knife,x) -> divided(x))"))
            .SameAs(P("tomato(x) & cut(knife,x) -> divided(x)")));
}

TEST_CASE("surface syntax") {
  SUBCASE("precedence") {
    Term t = P("!a(x) & b(x) | c(x) -> d(x) -> e(x)");
    REQUIRE(t.kind() == TermKind::kImplies);
    CHECK(t.right().kind() == TermKind::kImplies);
    CHECK(t.left().kind() == TermKind::kOr);
    CHECK(t.left().left().kind() == TermKind::kAnd);
    CHECK(t.left().left().left().kind() == TermKind::kNot);
  }
  SUBCASE("binder body extends to the right") {
    Term t = P("\\x. moved(x) & divided(x)");
    REQUIRE(t.kind() == TermKind::kLam);
    CHECK(t.body().kind() == TermKind::kAnd);
  }
  SUBCASE("identifiers") {
    CHECK(P("knife").kind() == TermKind::kConst);
    CHECK(P("y2").kind() == TermKind::kVar);
    CHECK(P("object_014").kind() == TermKind::kConst);
    CHECK(P("\\f. f(knife)").body().kind() == TermKind::kApp);
  }
  SUBCASE("round trip of shipped forms") {
    for (const char* text : {"\\x.\\y. take_down(x,y) -> !connected(x,y) & moved(x)",
                             "forall x. tomato(x) & cut(knife,x) -> divided(x)",
                             "exists y. on_top(y,bowl) | contained(bowl,y)", "(\\x. x) knife"}) {
      CHECK(ToString(P(text)) == text);
    }
  }
  SUBCASE("errors carry a position") {
    for (const char* bad : {"", "cut(knife", "\\. x", "a &", "cut(a,,b)", "x y)"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(P(bad), SyntaxError);
    }
  }
}

}  // namespace
}  // namespace actccg
