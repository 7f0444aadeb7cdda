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

// Triplet sequences to consequence reports: parse every triplet, assert the
// argmax logical forms and chain the axioms.

#ifndef ACTCCG_PIPELINE_HPP_
#define ACTCCG_PIPELINE_HPP_

#include <string>
#include <vector>

#include "actccg/corpus_io.hpp"
#include "actccg/grammar.hpp"
#include "actccg/learner.hpp"
#include "actccg/parser.hpp"
#include "actccg/reasoner.hpp"

namespace actccg {

struct ReasonOptions {
  bool chain_per_event = false;
  std::size_t derivation_cap = kDefaultDerivationCap;
  std::size_t step_budget = kDefaultStepBudget;
  double unknown_penalty = kUnknownActionPenalty;
};

struct ParsedEvent {
  Triplet triplet;
  Term logical_form;
  double probability = 0.0;
};

struct SequenceOutcome {
  std::string name;
  std::vector<ParsedEvent> events;
  FactBase final_kb;
  ConsequenceReport report;
};

// Unknown tokens get template entries before parsing.
ParsedEvent ParseEvent(const Triplet& triplet, const Lexicon& lexicon,
                       const ReasonOptions& options = {});

SequenceOutcome ReasonOverSequence(const SequenceFile& sequence, const Lexicon& lexicon,
                                   const std::vector<AxiomRule>& axioms,
                                   const ReasonOptions& options = {});

// Observed and deduced literals by origin tag, plus retractions.
ConsequenceReport ReportByOrigin(const FactBase& kb);

struct SequenceScore {
  std::string name;
  std::size_t gold = 0;
  std::size_t without_axioms = 0;
  std::size_t with_axioms = 0;
};

struct Evaluation {
  std::vector<SequenceScore> sequences;  // ordered by name
  SequenceScore total;
};

// A gold literal counts as matched when the identical ground literal is in
// the final fact base. Every sequence needs a gold file of the same name.
Evaluation Evaluate(const std::vector<SequenceFile>& sequences,
                    const std::vector<GoldConsequences>& gold, const Lexicon& lexicon,
                    const std::vector<AxiomRule>& axioms, const ReasonOptions& options = {});

std::string RenderEvaluation(const Evaluation& evaluation);

}  // namespace actccg

#endif  // ACTCCG_PIPELINE_HPP_
