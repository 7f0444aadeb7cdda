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

// Ground fact bases and forward chaining over positive Horn axioms.

#ifndef ACTCCG_REASONER_HPP_
#define ACTCCG_REASONER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "actccg/term.hpp"

namespace actccg {

struct Literal {
  bool positive = true;
  std::string predicate;
  std::vector<std::string> args;

  Literal Negated() const { return Literal{!positive, predicate, args}; }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// `pred(a,b)` or `!pred(a,b)`.
std::string ToString(const Literal& lit);
Literal ParseLiteral(std::string_view text);

enum class Origin { kObserved, kDeduced };

class FactBase {
 public:
  struct Fact {
    Literal literal;
    Origin origin;
  };

  bool Contains(const Literal& lit) const;

  // Records a literal. A literal replaces its complement if present ("latest
  // wins"); a positive literal replaced that way is remembered as retracted.
  // Returns false if the literal was already present. Throws
  // Error(kArityMismatch) when a predicate changes arity.
  bool Insert(const Literal& lit, Origin origin);

  // Facts in insertion order.
  const std::vector<Fact>& facts() const { return facts_; }
  const std::vector<Literal>& retracted() const { return retracted_; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }

  std::vector<Literal> Literals() const;
  // Positive facts of one predicate, in insertion order.
  std::vector<const Literal*> Positive(const std::string& predicate) const;

 private:
  static std::string Key(const Literal& lit);
  void Erase(const Literal& lit);

  std::vector<Fact> facts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Literal> retracted_;
  std::map<std::string, std::size_t> arity_;
};

// Adds a parsed action to the fact base: the action atom, then each literal of
// the consequent. Accepts `action` or `action -> l1 & l2 & ...` where each li
// is an atom or a negated atom over constants; anything else raises
// Error(kMalformedEvent).
FactBase AssertEvent(const Term& lf, FactBase kb);

struct PatternArg {
  bool is_variable;
  std::string name;
  friend bool operator==(const PatternArg&, const PatternArg&) = default;
};

struct Pattern {
  std::string predicate;
  std::vector<PatternArg> args;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct AxiomRule {
  std::string name;
  std::vector<Pattern> body;
  Pattern head;
};

std::string ToString(const Pattern& p);
// `axiom name: body1 & body2 => head`
std::string ToString(const AxiomRule& rule);

// Parses `axiom <name>: lit & lit ... => head`. Upper-case initial
// identifiers are variables. Throws SyntaxError, or
// Error(kRangeRestriction) when a head variable is missing from the body.
AxiomRule ParseAxiom(std::string_view text);

inline constexpr std::size_t kDefaultDerivationCap = 100000;

// Semi-naive evaluation to fixpoint. Deduced literals are tagged
// Origin::kDeduced; a head whose complement is recorded is not derived.
// Throws Error(kBudgetExceeded) once more than `cap` literals are deduced.
FactBase ForwardChain(FactBase kb, const std::vector<AxiomRule>& axioms,
                      std::size_t cap = kDefaultDerivationCap);

struct ConsequenceReport {
  std::vector<Literal> observed;
  std::vector<Literal> deduced;
  std::vector<Literal> retracted;
};

ConsequenceReport Report(const FactBase& before, const FactBase& after);

// Human-readable sections.
std::string RenderText(const ConsequenceReport& report);
// `observed|deduced|retracted <TAB> literal`, one per line.
std::string RenderTsv(const ConsequenceReport& report);

}  // namespace actccg

#endif  // ACTCCG_REASONER_HPP_
