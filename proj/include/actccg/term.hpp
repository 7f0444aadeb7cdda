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

// Lambda-calculus logical forms.
//
// A Term is an immutable, cheaply copyable handle to a shared node. Terms are
// untyped; well-formedness of applications is the business of the category
// layer.

#ifndef ACTCCG_TERM_HPP_
#define ACTCCG_TERM_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace actccg {

enum class TermKind {
  kVar,
  kConst,
  kPred,     // name(args...)
  kLam,      // \name. body
  kApp,      // fun arg
  kAnd,
  kOr,
  kNot,
  kImplies,
  kForall,
  kExists,
};

class Term {
 public:
  static Term Var(std::string name);
  static Term Const(std::string name);
  static Term Pred(std::string name, std::vector<Term> args);
  static Term Lam(std::string param, Term body);
  static Term App(Term fun, Term arg);
  static Term And(Term l, Term r);
  static Term Or(Term l, Term r);
  static Term Not(Term t);
  static Term Implies(Term l, Term r);
  static Term Forall(std::string var, Term body);
  static Term Exists(std::string var, Term body);

  TermKind kind() const { return node_->kind; }

  // Variable, constant or predicate name; bound name for binders.
  const std::string& name() const { return node_->name; }

  // Pred: arguments. App: {fun, arg}. Binary connectives: {l, r}.
  // Not, Lam, Forall, Exists: {body}.
  std::span<const Term> children() const { return node_->children; }
  const Term& child(std::size_t i) const { return node_->children[i]; }

  // Convenience accessors; only meaningful for the matching kinds.
  const Term& body() const { return node_->children[0]; }
  const Term& fun() const { return node_->children[0]; }
  const Term& arg() const { return node_->children[1]; }
  const Term& left() const { return node_->children[0]; }
  const Term& right() const { return node_->children[1]; }

  bool IsBinder() const;

  // Structural identity (no renaming). Use AlphaEqual for logical equality.
  bool SameAs(const Term& other) const;

  std::size_t Size() const;

 private:
  struct Node {
    TermKind kind;
    std::string name;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term Make(TermKind kind, std::string name, std::vector<Term> children);

  std::shared_ptr<const Node> node_;
};

// Step limit for BetaReduce; exceeding it raises ErrorCode::kNonTermination.
inline constexpr std::size_t kDefaultStepBudget = 10000;

std::set<std::string> FreeVars(const Term& t);

// Every variable name occurring in t, bound or free.
std::set<std::string> AllVarNames(const Term& t);

// First name in base, base1, base2, ... that is not in `avoid`. Trailing
// digits of `base` are dropped first so renames stay short (x1 -> x2).
std::string FreshName(std::string_view base, const std::set<std::string>& avoid);

// Capture-avoiding t[var := replacement].
Term Substitute(const Term& t, std::string_view var, const Term& replacement);

// Normal-order (leftmost-outermost) reduction to beta-normal form.
// Applying a constant or predicate to an argument extends its argument list:
// (tomato x) ~> tomato(x), cut(x) y ~> cut(x,y).
Term BetaReduce(const Term& t, std::size_t step_budget = kDefaultStepBudget);

bool IsBetaNormal(const Term& t);

bool AlphaEqual(const Term& a, const Term& b);

// Key identifying the alpha-class of a term: equal keys iff AlphaEqual.
std::string AlphaKey(const Term& t);

// Renames bound variables to x, y, z, w, v4, v5, ... in binding order,
// skipping names that occur free. Canonical members of an alpha-class render
// identically.
Term Canonicalize(const Term& t);

// Rewrites A -> (B -> C) into (A & B) -> C everywhere.
Term FlattenImplications(const Term& t);

struct InverseResult {
  Term function;
  bool vacuous = false;  // arg did not occur in result
};

// F = \v. result[arg := v], replacing every subterm alpha-equal to arg, so
// that BetaReduce(App(F, arg)) is alpha-equal to result. `param` is the
// preferred name for v; it is freshened against every name in result.
InverseResult InverseLambda(const Term& result, const Term& arg,
                            std::string_view param = "v");

// Number of leading Lam binders.
std::size_t LeadingLambdas(const Term& t);

// Collects name -> arity for every Pred node; used for arity consistency
// checks.
void CollectPredicateArities(const Term& t,
                             std::vector<std::pair<std::string, std::size_t>>& out);

// Surface syntax. Identifiers bound by an enclosing binder are variables;
// unbound identifiers are variables when they look like one (a single lower
// case letter with optional digits, e.g. x, y2, f) and constants otherwise.
// An applied identifier is an App when bound and a Pred when unbound.
Term ParseTerm(std::string_view text);
std::string ToString(const Term& t);

}  // namespace actccg

#endif  // ACTCCG_TERM_HPP_
