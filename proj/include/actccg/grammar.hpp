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

// CCG categories, lexicon and combinators.
//
// Functor semantics list their leading binders in the left-to-right order of
// the category's arguments in the string. For Cut := (AP\NP)/NP the entry
// \x.\y. cut(x,y) binds x to the subject (left) and y to the patient (right),
// although the patient is consumed first. Combine substitutes the binder
// belonging to the consumed argument, which keeps every intermediate sign in
// the same convention.

#ifndef ACTCCG_GRAMMAR_HPP_
#define ACTCCG_GRAMMAR_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "actccg/term.hpp"

namespace actccg {

enum class Atom { kN, kNP, kAP };
enum class Slash { kNone, kForward, kBackward };

class Category {
 public:
  static Category Atomic(Atom atom);
  static Category Forward(Category result, Category argument);
  static Category Backward(Category result, Category argument);

  bool IsAtomic() const { return node_->slash == Slash::kNone; }
  Atom atom() const { return node_->atom; }
  Slash slash() const { return node_->slash; }
  const Category& result() const { return node_->children[0]; }
  const Category& argument() const { return node_->children[1]; }

  // Number of arguments on the result spine: (AP\NP)/NP has 2.
  std::size_t Arity() const;
  // Backward arguments on the result spine.
  std::size_t LeftArity() const;

  friend bool operator==(const Category& a, const Category& b);

 private:
  struct Node {
    Slash slash;
    Atom atom;
    std::vector<Category> children;
  };
  explicit Category(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Slashes associate to the left; `AP\NP/NP` reads as `(AP\NP)/NP`.
Category ParseCategory(std::string_view text);
// Complex children are always parenthesized: `(AP\NP)/NP`.
std::string ToString(const Category& c);

// A category paired with its semantics.
struct Sign {
  Category category;
  Term semantics;
};

// Forward (A/B B => A) and backward (B A\B => A) application. The composed
// semantics is beta-reduced and curried implications are flattened so that
// p -> (q -> r) reads (p & q) -> r.
std::optional<Sign> Combine(const Sign& left, const Sign& right,
                            std::size_t step_budget = kDefaultStepBudget);

// N => NP with identity semantics.
std::optional<Sign> UnaryProject(const Sign& sign);

enum class Provenance { kSeed, kLearned, kTemplate };
const char* ProvenanceName(Provenance p);

struct LexEntry {
  std::string token;
  Category category;
  Term semantics;
  double weight = 0.0;
  Provenance provenance = Provenance::kSeed;
};

// Throws Error(kInvalidEntry) when the semantics has fewer leading binders
// than the category has arguments, is not beta-normal, or the weight is not
// finite.
void ValidateEntry(const LexEntry& entry);

// One lexicon file line: `Token := CATEGORY : TERM @ weight`.
std::string ToString(const LexEntry& entry);

// Shortest decimal that reads back to the same double, always with a point.
std::string FormatWeight(double w);

using EntryId = std::size_t;

// Lookup key for a token; lexicon lookup ignores case.
std::string TokenKey(std::string_view token);

class Lexicon {
 public:
  enum class AddResult { kAdded, kMergedKeptExisting, kMergedRaisedWeight };

  // Validates the entry and enforces one arity per predicate name. An entry
  // with the same token, category and alpha-class as an existing one is
  // merged, keeping the higher weight.
  AddResult Add(LexEntry entry);

  std::span<const EntryId> Candidates(std::string_view token) const;
  bool Contains(std::string_view token) const { return !Candidates(token).empty(); }

  std::optional<EntryId> Find(std::string_view token, const Category& category,
                              const Term& semantics) const;

  const LexEntry& entry(EntryId id) const { return entries_[id]; }
  std::span<const LexEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<double> Weights() const;
  void SetWeights(std::span<const double> weights);
  void SetWeight(EntryId id, double weight);

  // Tokens in first-seen order.
  const std::vector<std::string>& tokens() const { return token_order_; }

 private:
  std::vector<LexEntry> entries_;
  std::vector<std::string> keys_;  // alpha keys, parallel to entries_
  std::unordered_map<std::string, std::vector<EntryId>> by_token_;
  std::vector<std::string> token_order_;
  std::map<std::string, std::size_t> arity_;
};

}  // namespace actccg

#endif  // ACTCCG_GRAMMAR_HPP_
