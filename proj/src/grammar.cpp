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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "actccg/error.hpp"

namespace actccg {

Category Category::Atomic(Atom atom) {
  return Category(std::make_shared<const Node>(Node{Slash::kNone, atom, {}}));
}

Category Category::Forward(Category result, Category argument) {
  return Category(std::make_shared<const Node>(
      Node{Slash::kForward, Atom::kN, {std::move(result), std::move(argument)}}));
}

Category Category::Backward(Category result, Category argument) {
  return Category(std::make_shared<const Node>(
      Node{Slash::kBackward, Atom::kN, {std::move(result), std::move(argument)}}));
}

std::size_t Category::Arity() const {
  std::size_t n = 0;
  for (const Category* c = this; !c->IsAtomic(); c = &c->result()) ++n;
  return n;
}

std::size_t Category::LeftArity() const {
  std::size_t n = 0;
  for (const Category* c = this; !c->IsAtomic(); c = &c->result()) {
    if (c->slash() == Slash::kBackward) ++n;
  }
  return n;
}

bool operator==(const Category& a, const Category& b) {
  if (a.node_ == b.node_) return true;
  if (a.slash() != b.slash()) return false;
  if (a.IsAtomic()) return a.atom() == b.atom();
  return a.result() == b.result() && a.argument() == b.argument();
}

namespace {

class CategoryParser {
 public:
  explicit CategoryParser(std::string_view text) : text_(text) {}

  Category ParseAll() {
    Category c = ParseSlashed();
    SkipSpace();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return c;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Category ParseSlashed() {
    Category lhs = ParsePrimary();
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size()) return lhs;
      char c = text_[pos_];
      if (c != '/' && c != '\\') return lhs;
      ++pos_;
      Category rhs = ParsePrimary();
      lhs = c == '/' ? Category::Forward(std::move(lhs), std::move(rhs))
                     : Category::Backward(std::move(lhs), std::move(rhs));
    }
  }

  Category ParsePrimary() {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Category inner = ParseSlashed();
      SkipSpace();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "N") return Category::Atomic(Atom::kN);
    if (name == "NP") return Category::Atomic(Atom::kNP);
    if (name == "AP") return Category::Atomic(Atom::kAP);
    pos_ = start;
    throw SyntaxError(name.empty() ? "expected category" : "unknown atomic category '" +
                                                                std::string(name) + "'",
                      start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void Render(const Category& c, bool wrap, std::string& out) {
  if (c.IsAtomic()) {
    switch (c.atom()) {
      case Atom::kN: out += "N"; break;
      case Atom::kNP: out += "NP"; break;
      case Atom::kAP: out += "AP"; break;
    }
    return;
  }
  if (wrap) out += '(';
  Render(c.result(), true, out);
  out += c.slash() == Slash::kForward ? '/' : '\\';
  Render(c.argument(), true, out);
  if (wrap) out += ')';
}

// Applies `arg` to the binder at `index` among the functor's leading binders.
Term ApplyAt(const Term& functor, std::size_t index, const Term& arg,
             std::size_t step_budget) {
  if (LeadingLambdas(functor) <= index) {
    throw Error(ErrorCode::kInvalidEntry,
                "functor semantics " + ToString(functor) +
                    " has too few binders for its category");
  }
  std::set<std::string> arg_free = FreeVars(arg);
  std::set<std::string> avoid = AllVarNames(functor);
  avoid.insert(arg_free.begin(), arg_free.end());
  std::vector<std::string> outer;
  Term cur = functor;
  for (std::size_t i = 0; i < index; ++i) {
    std::string name = cur.name();
    Term body = cur.body();
    if (arg_free.count(name) != 0) {
      std::string fresh = FreshName(name, avoid);
      avoid.insert(fresh);
      body = Substitute(body, name, Term::Var(fresh));
      name = fresh;
    }
    outer.push_back(std::move(name));
    cur = std::move(body);
  }
  Term reduced = BetaReduce(Term::App(cur, arg), step_budget);
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
    reduced = Term::Lam(*it, std::move(reduced));
  }
  return FlattenImplications(reduced);
}

}  // namespace

Category ParseCategory(std::string_view text) { return CategoryParser(text).ParseAll(); }

std::string ToString(const Category& c) {
  std::string out;
  Render(c, false, out);
  return out;
}

std::optional<Sign> Combine(const Sign& left, const Sign& right, std::size_t step_budget) {
  const Category& lc = left.category;
  const Category& rc = right.category;
  if (lc.slash() == Slash::kForward && lc.argument() == rc) {
    std::size_t index = lc.LeftArity();
    return Sign{lc.result(), ApplyAt(left.semantics, index, right.semantics, step_budget)};
  }
  if (rc.slash() == Slash::kBackward && rc.argument() == lc) {
    std::size_t index = rc.LeftArity() - 1;
    return Sign{rc.result(), ApplyAt(right.semantics, index, left.semantics, step_budget)};
  }
  return std::nullopt;
}

std::optional<Sign> UnaryProject(const Sign& sign) {
  if (sign.category.IsAtomic() && sign.category.atom() == Atom::kN) {
    return Sign{Category::Atomic(Atom::kNP), sign.semantics};
  }
  return std::nullopt;
}

const char* ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kSeed: return "seed";
    case Provenance::kLearned: return "learned";
    case Provenance::kTemplate: return "template";
  }
  return "seed";
}

void ValidateEntry(const LexEntry& entry) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kInvalidEntry, "entry for '" + entry.token + "': " + why);
  };
  if (entry.token.empty()) fail("empty token");
  if (!std::isfinite(entry.weight)) fail("weight is not finite");
  if (!IsBetaNormal(entry.semantics)) fail("semantics is not beta-normal");
  std::size_t arity = entry.category.Arity();
  if (LeadingLambdas(entry.semantics) < arity) {
    fail("category " + ToString(entry.category) + " takes " + std::to_string(arity) +
         " arguments but semantics has " + std::to_string(LeadingLambdas(entry.semantics)) +
         " leading binders");
  }
}

std::string FormatWeight(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), w);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string ToString(const LexEntry& entry) {
  return entry.token + " := " + ToString(entry.category) + " : " + ToString(entry.semantics) +
         " @ " + FormatWeight(entry.weight);
}

std::string TokenKey(std::string_view token) {
  std::string key(token);
  for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return key;
}

Lexicon::AddResult Lexicon::Add(LexEntry entry) {
  ValidateEntry(entry);
  std::vector<std::pair<std::string, std::size_t>> arities;
  CollectPredicateArities(entry.semantics, arities);
  for (const auto& [name, n] : arities) {
    auto it = arity_.find(name);
    if (it != arity_.end() && it->second != n) {
      throw Error(ErrorCode::kArityMismatch,
                  "predicate '" + name + "' used with arity " + std::to_string(n) +
                      " but earlier with " + std::to_string(it->second));
    }
  }
  std::string key = TokenKey(entry.token);
  std::string alpha = AlphaKey(entry.semantics);
  auto& ids = by_token_[key];
  for (EntryId id : ids) {
    if (entries_[id].category == entry.category && keys_[id] == alpha) {
      if (entry.weight > entries_[id].weight) {
        entries_[id].weight = entry.weight;
        return AddResult::kMergedRaisedWeight;
      }
      return AddResult::kMergedKeptExisting;
    }
  }
  for (const auto& [name, n] : arities) arity_.emplace(name, n);
  if (ids.empty()) token_order_.push_back(entry.token);
  ids.push_back(entries_.size());
  entries_.push_back(std::move(entry));
  keys_.push_back(std::move(alpha));
  return AddResult::kAdded;
}

std::span<const EntryId> Lexicon::Candidates(std::string_view token) const {
  auto it = by_token_.find(TokenKey(token));
  if (it == by_token_.end()) return {};
  return it->second;
}

std::optional<EntryId> Lexicon::Find(std::string_view token, const Category& category,
                                     const Term& semantics) const {
  std::string alpha = AlphaKey(semantics);
  for (EntryId id : Candidates(token)) {
    if (entries_[id].category == category && keys_[id] == alpha) return id;
  }
  return std::nullopt;
}

std::vector<double> Lexicon::Weights() const {
  std::vector<double> w;
  w.reserve(entries_.size());
  for (const LexEntry& e : entries_) w.push_back(e.weight);
  return w;
}

void Lexicon::SetWeights(std::span<const double> weights) {
  if (weights.size() != entries_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "weight vector size mismatch");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) SetWeight(i, weights[i]);
}

void Lexicon::SetWeight(EntryId id, double weight) {
  if (!std::isfinite(weight)) {
    throw Error(ErrorCode::kInvalidEntry, "weight is not finite");
  }
  entries_.at(id).weight = weight;
}

}  // namespace actccg
