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

// Lexicon induction and log-linear weight estimation.

#ifndef ACTCCG_LEARNER_HPP_
#define ACTCCG_LEARNER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "actccg/error.hpp"
#include "actccg/grammar.hpp"
#include "actccg/parser.hpp"
#include "actccg/term.hpp"

namespace actccg {

struct TrainingSample {
  std::vector<std::string> tokens;  // subject action patient
  Term gold;
  std::size_t line = 0;  // source line, 0 if synthesized
};

struct TrainConfig {
  int iterations = 100;
  double learning_rate = 0.1;
  double l2 = 0.0;
  std::size_t step_budget = kDefaultStepBudget;
  std::uint64_t seed = 0;
};

// Throws Error(kInvalidArgument) on non-positive or non-finite fields.
void ValidateConfig(const TrainConfig& cfg);

// The main type of every action: (AP\NP)/NP.
Category ActionCategory();

struct InductionOptions {
  // Besides the fully general entry, also propose entries that keep the
  // subject or the patient constant. Training then has to discover that the
  // general entry explains the corpus best.
  bool specific_candidates = true;
};

// Proposes action entries for the middle token of a triplet by abstracting
// the subject and patient constants out of the gold form with inverse-lambda.
// The first element is the fully general entry. Each returned entry has been
// checked to reproduce the gold form when parsed; entries already present in
// `lexicon` are left out. Throws Error(kInductionFailure) when the subject
// or patient has no N entry or the round trip fails.
std::vector<LexEntry> InduceEntries(const TrainingSample& sample, const Lexicon& lexicon,
                                    const InductionOptions& options = {});

// Runs InduceEntries over the corpus and adds everything to a copy of
// `seed`. Samples that fail induction are reported and skipped.
Lexicon InduceLexicon(const std::vector<TrainingSample>& corpus, const Lexicon& seed,
                      Diagnostics* diagnostics = nullptr,
                      const InductionOptions& options = {});

inline constexpr double kUnknownActionPenalty = -1.0;

// Adds template entries for tokens without candidates: Object_<id> becomes
// N : object_<id>; anything else becomes an action \x.\y. token(x,y) with
// weight `unknown_penalty`.
Lexicon InjectTemplates(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                        double unknown_penalty = kUnknownActionPenalty);

// Conditional log-likelihood of gold forms, with all parses enumerated once
// up front. Samples with no derivation reaching their gold form are dropped.
class Objective {
 public:
  Objective(const std::vector<TrainingSample>& corpus, const Lexicon& lexicon,
            double l2 = 0.0, std::size_t step_budget = kDefaultStepBudget,
            Diagnostics* diagnostics = nullptr);

  // sum_s log P(gold_s | tokens_s) - l2/2 |w|^2
  double Value(std::span<const double> weights) const;
  std::vector<double> Gradient(std::span<const double> weights) const;

  std::size_t usable_samples() const { return samples_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  struct Parsed {
    std::vector<FeatureCounts> features;
    std::vector<bool> gold;
  };
  std::vector<Parsed> samples_;
  std::size_t dimension_;
  double l2_;
};

struct TrainResult {
  Lexicon lexicon;
  double log_likelihood = 0.0;          // objective after the last step
  std::vector<double> history;          // objective before each step, then final
  std::size_t usable_samples = 0;
};

// Full-batch gradient ascent from all-zero weights. Throws
// Error(kDegenerateCorpus) if no sample can reach its gold form.
TrainResult Train(const std::vector<TrainingSample>& corpus, const Lexicon& lexicon,
                  const TrainConfig& cfg, Diagnostics* diagnostics = nullptr);

// The highest-weight entry of `token` (first on ties), if any.
std::optional<EntryId> BestEntry(const Lexicon& lexicon, std::string_view token);

}  // namespace actccg

#endif  // ACTCCG_LEARNER_HPP_
