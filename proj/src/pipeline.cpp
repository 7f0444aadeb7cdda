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

#include "actccg/pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace actccg {

ParsedEvent ParseEvent(const Triplet& triplet, const Lexicon& lexicon,
                       const ReasonOptions& options) {
  std::vector<std::string> tokens = triplet.Tokens();
  Lexicon augmented = InjectTemplates(tokens, lexicon, options.unknown_penalty);
  ParseOptions parse_options;
  parse_options.step_budget = options.step_budget;
  ParseResult best = ArgmaxParse(tokens, augmented, parse_options);
  return ParsedEvent{triplet, best.logical_form, best.probability};
}

ConsequenceReport ReportByOrigin(const FactBase& kb) {
  ConsequenceReport r;
  for (const auto& f : kb.facts()) {
    (f.origin == Origin::kObserved ? r.observed : r.deduced).push_back(f.literal);
  }
  r.retracted = kb.retracted();
  return r;
}

SequenceOutcome ReasonOverSequence(const SequenceFile& sequence, const Lexicon& lexicon,
                                   const std::vector<AxiomRule>& axioms,
                                   const ReasonOptions& options) {
  SequenceOutcome out{sequence.name, {}, {}, {}};
  FactBase kb;
  for (const Triplet& t : sequence.triplets) {
    out.events.push_back(ParseEvent(t, lexicon, options));
    kb = AssertEvent(out.events.back().logical_form, std::move(kb));
    if (options.chain_per_event) kb = ForwardChain(std::move(kb), axioms, options.derivation_cap);
  }
  if (options.chain_per_event) {
    out.final_kb = std::move(kb);
    out.report = ReportByOrigin(out.final_kb);
  } else {
    out.final_kb = ForwardChain(kb, axioms, options.derivation_cap);
    out.report = Report(kb, out.final_kb);
  }
  return out;
}

Evaluation Evaluate(const std::vector<SequenceFile>& sequences,
                    const std::vector<GoldConsequences>& gold, const Lexicon& lexicon,
                    const std::vector<AxiomRule>& axioms, const ReasonOptions& options) {
  std::map<std::string, const GoldConsequences*> gold_by_name;
  for (const GoldConsequences& g : gold) gold_by_name[g.name] = &g;

  std::vector<const SequenceFile*> ordered;
  for (const SequenceFile& s : sequences) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const SequenceFile* a, const SequenceFile* b) { return a->name < b->name; });

  Evaluation ev;
  ev.total.name = "total";
  for (const SequenceFile* seq : ordered) {
    auto it = gold_by_name.find(seq->name);
    if (it == gold_by_name.end()) {
      throw Error(ErrorCode::kInvalidArgument, "no gold consequences for sequence '" + seq->name + "'");
    }
    auto count = [&](const FactBase& kb) {
      return static_cast<std::size_t>(std::count_if(
          it->second->literals.begin(), it->second->literals.end(),
          [&](const Literal& l) { return kb.Contains(l); }));
    };
    SequenceScore score{seq->name, it->second->literals.size(), 0, 0};
    score.without_axioms = count(ReasonOverSequence(*seq, lexicon, {}, options).final_kb);
    score.with_axioms = count(ReasonOverSequence(*seq, lexicon, axioms, options).final_kb);
    ev.total.gold += score.gold;
    ev.total.without_axioms += score.without_axioms;
    ev.total.with_axioms += score.with_axioms;
    ev.sequences.push_back(std::move(score));
  }
  return ev;
}

std::string RenderEvaluation(const Evaluation& evaluation) {
  std::size_t width = 8;
  for (const SequenceScore& s : evaluation.sequences) width = std::max(width, s.name.size());
  std::ostringstream out;
  auto rate = [](std::size_t matched, std::size_t gold) {
    std::ostringstream r;
    r << std::fixed << std::setprecision(1) << (gold ? 100.0 * matched / gold : 0.0) << '%';
    return r.str();
  };
  auto row = [&](const SequenceScore& s) {
    out << std::left << std::setw(static_cast<int>(width)) << s.name << std::right
        << std::setw(6) << s.gold << std::setw(9) << s.without_axioms << std::setw(8)
        << rate(s.without_axioms, s.gold) << std::setw(7) << s.with_axioms << std::setw(8)
        << rate(s.with_axioms, s.gold) << '\n';
  };
  out << std::left << std::setw(static_cast<int>(width)) << "sequence" << std::right
      << std::setw(6) << "gold" << std::setw(9) << "without" << std::setw(8) << "rate"
      << std::setw(7) << "with" << std::setw(8) << "rate" << '\n';
  for (const SequenceScore& s : evaluation.sequences) row(s);
  row(evaluation.total);
  return out.str();
}

}  // namespace actccg
