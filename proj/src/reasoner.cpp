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
#include <cctype>
#include <set>
#include <sstream>

#include "actccg/error.hpp"

namespace actccg {

std::string ToString(const Literal& lit) {
  std::string out = lit.positive ? "" : "!";
  out += lit.predicate;
  out += '(';
  for (std::size_t i = 0; i < lit.args.size(); ++i) {
    if (i) out += ',';
    out += lit.args[i];
  }
  out += ')';
  return out;
}

namespace {

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Minimal cursor over `[!]name(arg, ...)` and the axiom punctuation.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  bool Accept(std::string_view lit) {
    SkipSpace();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }
  void Expect(std::string_view lit) {
    if (!Accept(lit)) throw SyntaxError("expected '" + std::string(lit) + "'", pos_);
  }
  std::string Ident() {
    SkipSpace();
    if (pos_ >= text_.size() || !IsIdentStart(text_[pos_])) {
      throw SyntaxError("expected identifier", pos_);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }

  // name(arg, ...)
  std::pair<std::string, std::vector<std::string>> Atom() {
    std::string name = Ident();
    Expect("(");
    std::vector<std::string> args{Ident()};
    while (Accept(",")) args.push_back(Ident());
    Expect(")");
    return {std::move(name), std::move(args)};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool IsVariableName(const std::string& name) {
  return std::isupper(static_cast<unsigned char>(name[0])) != 0;
}

Pattern ToPattern(std::pair<std::string, std::vector<std::string>> atom) {
  Pattern p{std::move(atom.first), {}};
  for (auto& a : atom.second) p.args.push_back(PatternArg{IsVariableName(a), std::move(a)});
  return p;
}

// Literal from a ground atom term, or nullopt if the term is not one.
std::optional<Literal> GroundAtom(const Term& t, bool positive) {
  if (t.kind() != TermKind::kPred) return std::nullopt;
  Literal lit{positive, t.name(), {}};
  for (const Term& a : t.children()) {
    if (a.kind() != TermKind::kConst) return std::nullopt;
    lit.args.push_back(a.name());
  }
  return lit;
}

void CollectConsequences(const Term& t, std::vector<Literal>& out, const Term& whole) {
  auto malformed = [&]() {
    return Error(ErrorCode::kMalformedEvent,
                 "unsupported event form: " + ToString(whole));
  };
  if (t.kind() == TermKind::kAnd) {
    CollectConsequences(t.left(), out, whole);
    CollectConsequences(t.right(), out, whole);
    return;
  }
  bool positive = true;
  const Term* atom = &t;
  if (t.kind() == TermKind::kNot) {
    positive = false;
    atom = &t.body();
  }
  auto lit = GroundAtom(*atom, positive);
  if (!lit) throw malformed();
  out.push_back(std::move(*lit));
}

using Binding = std::map<std::string, std::string>;

bool Unify(const Pattern& p, const Literal& lit, Binding& b) {
  if (p.predicate != lit.predicate || p.args.size() != lit.args.size()) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    const PatternArg& a = p.args[i];
    if (!a.is_variable) {
      if (a.name != lit.args[i]) return false;
      continue;
    }
    auto [it, inserted] = b.emplace(a.name, lit.args[i]);
    if (!inserted && it->second != lit.args[i]) return false;
  }
  return true;
}

Literal Instantiate(const Pattern& p, const Binding& b) {
  Literal lit{true, p.predicate, {}};
  for (const PatternArg& a : p.args) lit.args.push_back(a.is_variable ? b.at(a.name) : a.name);
  return lit;
}

// Positive facts grouped by predicate.
using FactIndex = std::map<std::string, std::vector<Literal>>;

// Enumerates body matches where literal `pivot` comes from `delta` and the
// rest from `all`; calls `emit` with each head instance.
template <typename Emit>
void MatchBody(const AxiomRule& rule, std::size_t pivot, const FactIndex& delta,
               const FactIndex& all, std::size_t i, Binding& b, Emit& emit) {
  if (i == rule.body.size()) {
    emit(Instantiate(rule.head, b));
    return;
  }
  const FactIndex& source = i == pivot ? delta : all;
  auto it = source.find(rule.body[i].predicate);
  if (it == source.end()) return;
  for (const Literal& lit : it->second) {
    Binding next = b;
    if (Unify(rule.body[i], lit, next)) MatchBody(rule, pivot, delta, all, i + 1, next, emit);
  }
}

}  // namespace

Literal ParseLiteral(std::string_view text) {
  Cursor c(text);
  bool positive = !c.Accept("!");
  auto [name, args] = c.Atom();
  if (!c.AtEnd()) throw SyntaxError("unexpected trailing input", c.pos());
  return Literal{positive, std::move(name), std::move(args)};
}

std::string FactBase::Key(const Literal& lit) { return ToString(lit); }

bool FactBase::Contains(const Literal& lit) const { return index_.count(Key(lit)) != 0; }

void FactBase::Erase(const Literal& lit) {
  auto it = index_.find(Key(lit));
  if (it == index_.end()) return;
  std::size_t pos = it->second;
  facts_.erase(facts_.begin() + static_cast<std::ptrdiff_t>(pos));
  index_.erase(it);
  for (auto& [key, p] : index_) {
    if (p > pos) --p;
  }
}

bool FactBase::Insert(const Literal& lit, Origin origin) {
  auto [it, fresh] = arity_.emplace(lit.predicate, lit.args.size());
  if (!fresh && it->second != lit.args.size()) {
    throw Error(ErrorCode::kArityMismatch, "predicate '" + lit.predicate + "' used with arity " +
                                               std::to_string(lit.args.size()) + " but earlier with " +
                                               std::to_string(it->second));
  }
  if (Contains(lit)) return false;
  Literal complement = lit.Negated();
  if (Contains(complement)) {
    if (complement.positive) retracted_.push_back(complement);
    Erase(complement);
  }
  index_.emplace(Key(lit), facts_.size());
  facts_.push_back(Fact{lit, origin});
  return true;
}

std::vector<Literal> FactBase::Literals() const {
  std::vector<Literal> out;
  out.reserve(facts_.size());
  for (const Fact& f : facts_) out.push_back(f.literal);
  return out;
}

std::vector<const Literal*> FactBase::Positive(const std::string& predicate) const {
  std::vector<const Literal*> out;
  for (const Fact& f : facts_) {
    if (f.literal.positive && f.literal.predicate == predicate) out.push_back(&f.literal);
  }
  return out;
}

FactBase AssertEvent(const Term& lf, FactBase kb) {
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::kMalformedEvent, why + ": " + ToString(lf));
  };
  if (!FreeVars(lf).empty()) throw malformed("event contains free variables");
  const Term* action = &lf;
  std::vector<Literal> consequences;
  if (lf.kind() == TermKind::kImplies) {
    action = &lf.left();
    CollectConsequences(lf.right(), consequences, lf);
  }
  auto atom = GroundAtom(*action, true);
  if (!atom) throw malformed("event must be an action atom optionally implying literals");
  kb.Insert(*atom, Origin::kObserved);
  for (const Literal& lit : consequences) kb.Insert(lit, Origin::kObserved);
  return kb;
}

std::string ToString(const Pattern& p) {
  std::string out = p.predicate + "(";
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (i) out += ',';
    out += p.args[i].name;
  }
  return out + ")";
}

std::string ToString(const AxiomRule& rule) {
  std::string out = "axiom " + rule.name + ": ";
  for (std::size_t i = 0; i < rule.body.size(); ++i) {
    if (i) out += " & ";
    out += ToString(rule.body[i]);
  }
  return out + " => " + ToString(rule.head);
}

AxiomRule ParseAxiom(std::string_view text) {
  Cursor c(text);
  if (c.Ident() != "axiom") throw SyntaxError("expected 'axiom'", 0);
  AxiomRule rule;
  rule.name = c.Ident();
  c.Expect(":");
  do {
    if (c.Accept("!")) throw SyntaxError("negated literals are not allowed in axioms", c.pos());
    rule.body.push_back(ToPattern(c.Atom()));
  } while (c.Accept("&"));
  c.Expect("=>");
  if (c.Accept("!")) throw SyntaxError("negated literals are not allowed in axioms", c.pos());
  rule.head = ToPattern(c.Atom());
  if (!c.AtEnd()) throw SyntaxError("unexpected trailing input", c.pos());

  std::set<std::string> bound;
  for (const Pattern& p : rule.body) {
    for (const PatternArg& a : p.args) {
      if (a.is_variable) bound.insert(a.name);
    }
  }
  for (const PatternArg& a : rule.head.args) {
    if (a.is_variable && bound.count(a.name) == 0) {
      throw Error(ErrorCode::kRangeRestriction,
                  "axiom " + rule.name + ": head variable " + a.name + " does not occur in the body");
    }
  }
  return rule;
}

FactBase ForwardChain(FactBase kb, const std::vector<AxiomRule>& axioms, std::size_t cap) {
  FactIndex all;
  for (const auto& f : kb.facts()) {
    if (f.literal.positive) all[f.literal.predicate].push_back(f.literal);
  }
  FactIndex delta = all;
  std::size_t deduced = 0;
  while (!delta.empty()) {
    std::vector<Literal> found;
    std::set<Literal> found_set;
    auto emit = [&](Literal lit) {
      if (kb.Contains(lit) || kb.Contains(lit.Negated())) return;
      if (found_set.insert(lit).second) found.push_back(std::move(lit));
    };
    for (const AxiomRule& rule : axioms) {
      for (std::size_t pivot = 0; pivot < rule.body.size(); ++pivot) {
        Binding b;
        MatchBody(rule, pivot, delta, all, 0, b, emit);
      }
    }
    delta.clear();
    for (const Literal& lit : found) {
      if (++deduced > cap) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "forward chaining deduced more than " + std::to_string(cap) + " literals");
      }
      kb.Insert(lit, Origin::kDeduced);
      all[lit.predicate].push_back(lit);
      delta[lit.predicate].push_back(lit);
    }
  }
  return kb;
}

ConsequenceReport Report(const FactBase& before, const FactBase& after) {
  ConsequenceReport r;
  for (const auto& f : before.facts()) {
    if (after.Contains(f.literal)) r.observed.push_back(f.literal);
  }
  for (const auto& f : after.facts()) {
    if (!before.Contains(f.literal)) r.deduced.push_back(f.literal);
  }
  r.retracted = after.retracted();
  return r;
}

std::string RenderText(const ConsequenceReport& report) {
  std::ostringstream out;
  auto section = [&](const char* title, const std::vector<Literal>& lits) {
    out << title << " (" << lits.size() << "):\n";
    for (const Literal& l : lits) out << "  " << ToString(l) << '\n';
  };
  section("observed", report.observed);
  section("deduced", report.deduced);
  section("retracted", report.retracted);
  return out.str();
}

std::string RenderTsv(const ConsequenceReport& report) {
  std::ostringstream out;
  for (const Literal& l : report.observed) out << "observed\t" << ToString(l) << '\n';
  for (const Literal& l : report.deduced) out << "deduced\t" << ToString(l) << '\n';
  for (const Literal& l : report.retracted) out << "retracted\t" << ToString(l) << '\n';
  return out.str();
}

}  // namespace actccg
