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

// CKY chart parsing and log-linear (lexical feature) scoring.

#ifndef ACTCCG_PARSER_HPP_
#define ACTCCG_PARSER_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "actccg/grammar.hpp"
#include "actccg/term.hpp"

namespace actccg {

// Sorted (entry, count) pairs.
using FeatureCounts = std::vector<std::pair<EntryId, int>>;

FeatureCounts MergeCounts(const FeatureCounts& a, const FeatureCounts& b);

// f . theta for a derivation.
double Score(const FeatureCounts& features, const Lexicon& lexicon);

struct Derivation {
  enum class Rule { kLexical, kUnary, kForward, kBackward };

  Rule rule = Rule::kLexical;
  std::size_t begin = 0;  // token span [begin, end)
  std::size_t end = 0;
  Sign sign;
  EntryId entry = 0;  // kLexical only
  std::vector<std::shared_ptr<const Derivation>> children;
  FeatureCounts features;
};

struct ParseOptions {
  Atom goal = Atom::kAP;
  std::size_t step_budget = kDefaultStepBudget;
};

// Every full-span derivation rooted at the goal category, in chart order.
// Throws UnknownTokenError when some token has no candidates and
// Error(kNoParse) when no goal item spans the input.
std::vector<Derivation> ParseAll(const std::vector<std::string>& tokens,
                                 const Lexicon& lexicon, const ParseOptions& options = {});

// One alpha-class of root semantics with its summed probability.
struct LogicalFormClass {
  Term logical_form;  // canonicalized
  double probability = 0.0;
  std::vector<Derivation> derivations;
};

// Derivation probabilities P(L,T | tokens) under the lexicon weights,
// normalized over `derivations`.
std::vector<double> DerivationProbabilities(const std::vector<Derivation>& derivations,
                                            const Lexicon& lexicon);

// Classes sorted by probability, ties by canonical rendering.
std::vector<LogicalFormClass> RankLogicalForms(std::vector<Derivation> derivations,
                                               const Lexicon& lexicon);

// Sum of P(L,T) over derivations whose semantics is alpha-equal to `lf`.
double ParseProbability(const Term& lf, const std::vector<std::string>& tokens,
                        const Lexicon& lexicon, const ParseOptions& options = {});

struct ParseResult {
  Term logical_form;
  double probability = 0.0;
  std::vector<Derivation> derivations;
};

ParseResult ArgmaxParse(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                        const ParseOptions& options = {});

// Indented bracketed tree, one node per line.
std::string RenderDerivation(const Derivation& d, const Lexicon& lexicon);

// Recomputes every node's sign from its leaves with Combine/UnaryProject;
// true when all nodes agree with what the parser stored.
bool VerifyDerivation(const Derivation& d, const Lexicon& lexicon);

}  // namespace actccg

#endif  // ACTCCG_PARSER_HPP_
