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

#include "actccg/actccg.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "actccg/corpus_io.hpp"
#include "actccg/learner.hpp"
#include "actccg/parser.hpp"
#include "actccg/pipeline.hpp"
#include "actccg/reasoner.hpp"

struct actccg_lexicon {
  actccg::Lexicon lexicon;
  std::vector<std::string> entries;
  std::vector<std::string> diagnostics;

  void Refresh(const actccg::Diagnostics& diags) {
    entries.clear();
    for (const auto& e : lexicon.entries()) entries.push_back(actccg::ToString(e));
    diagnostics.clear();
    for (const auto& d : diags) diagnostics.push_back(actccg::ToString(d));
  }
};

struct actccg_parse_result {
  std::string logical_form;
  double probability = 0.0;
  std::vector<std::string> derivations;
  std::vector<double> derivation_probabilities;
};

struct actccg_axioms {
  std::vector<actccg::AxiomRule> rules;
};

struct actccg_report {
  actccg::ConsequenceReport report;
  std::vector<std::string> events;
  std::vector<std::string> observed;
  std::vector<std::string> deduced;
  std::vector<std::string> retracted;
  std::string rendered;
};

struct actccg_evaluation {
  actccg::Evaluation evaluation;
  std::string rendered;
};

namespace {

thread_local std::string last_error;

actccg_status Fail(actccg_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
actccg_status Guard(Fn fn) {
  try {
    fn();
    last_error.clear();
    return ACTCCG_OK;
  } catch (const actccg::Error& e) {
    return Fail(static_cast<actccg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(ACTCCG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(ACTCCG_ERR_INTERNAL, e.what());
  }
}

actccg_status NullArgument(const char* name) {
  return Fail(ACTCCG_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

const char* At(const std::vector<std::string>& v, size_t i) {
  return i < v.size() ? v[i].c_str() : nullptr;
}

std::vector<std::string> ToStrings(const std::vector<actccg::Literal>& lits) {
  std::vector<std::string> out;
  for (const auto& l : lits) out.push_back(actccg::ToString(l));
  return out;
}

std::vector<std::string> SplitSentence(const char* sentence) {
  std::istringstream in(sentence);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

}  // namespace

extern "C" {

const char* actccg_version(void) { return "0.1.0"; }

const char* actccg_last_error(void) { return last_error.c_str(); }

const char* actccg_status_name(actccg_status status) {
  if (status == ACTCCG_OK) return "ok";
  if (status == ACTCCG_ERR_INTERNAL) return "internal";
  return actccg::ErrorCodeName(static_cast<actccg::ErrorCode>(status));
}

void actccg_train_config_default(actccg_train_config* cfg) {
  if (!cfg) return;
  actccg::TrainConfig d;
  cfg->iterations = d.iterations;
  cfg->learning_rate = d.learning_rate;
  cfg->l2 = d.l2;
}

actccg_status actccg_lexicon_load(const char* path, actccg_lexicon** out) {
  if (!path) return NullArgument("path");
  if (!out) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    auto handle = std::make_unique<actccg_lexicon>();
    actccg::Diagnostics diags;
    handle->lexicon = actccg::LoadLexicon(path, &diags);
    handle->Refresh(diags);
    *out = handle.release();
  });
}

actccg_status actccg_lexicon_save(const actccg_lexicon* lexicon, const char* path) {
  if (!lexicon) return NullArgument("lexicon");
  if (!path) return NullArgument("path");
  return Guard([&] { actccg::SaveLexicon(lexicon->lexicon, path); });
}

void actccg_lexicon_free(actccg_lexicon* lexicon) { delete lexicon; }

size_t actccg_lexicon_size(const actccg_lexicon* lexicon) {
  return lexicon ? lexicon->entries.size() : 0;
}

const char* actccg_lexicon_entry(const actccg_lexicon* lexicon, size_t index) {
  return lexicon ? At(lexicon->entries, index) : nullptr;
}

size_t actccg_lexicon_diagnostic_count(const actccg_lexicon* lexicon) {
  return lexicon ? lexicon->diagnostics.size() : 0;
}

const char* actccg_lexicon_diagnostic(const actccg_lexicon* lexicon, size_t index) {
  return lexicon ? At(lexicon->diagnostics, index) : nullptr;
}

actccg_status actccg_learn(const char* corpus_path, const char* seed_path,
                           const actccg_train_config* cfg, actccg_lexicon** out,
                           double* log_likelihood) {
  if (!corpus_path) return NullArgument("corpus_path");
  if (!seed_path) return NullArgument("seed_path");
  if (!out) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    actccg::TrainConfig config;
    if (cfg) {
      config.iterations = cfg->iterations;
      config.learning_rate = cfg->learning_rate;
      config.l2 = cfg->l2;
    }
    actccg::ValidateConfig(config);
    actccg::Diagnostics diags;
    auto corpus = actccg::LoadCorpus(corpus_path);
    auto seed = actccg::LoadLexicon(seed_path, &diags);
    auto induced = actccg::InduceLexicon(corpus, seed, &diags);
    auto result = actccg::Train(corpus, induced, config, &diags);
    auto handle = std::make_unique<actccg_lexicon>();
    handle->lexicon = std::move(result.lexicon);
    handle->Refresh(diags);
    if (log_likelihood) *log_likelihood = result.log_likelihood;
    *out = handle.release();
  });
}

actccg_status actccg_parse(const actccg_lexicon* lexicon, const char* sentence,
                           actccg_parse_result** out) {
  if (!lexicon) return NullArgument("lexicon");
  if (!sentence) return NullArgument("sentence");
  if (!out) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    std::vector<std::string> tokens = SplitSentence(sentence);
    actccg::Lexicon lex = actccg::InjectTemplates(tokens, lexicon->lexicon);
    std::vector<actccg::Derivation> all = actccg::ParseAll(tokens, lex);
    std::vector<double> scores;
    double max_score = -INFINITY;
    for (const auto& d : all) {
      scores.push_back(actccg::Score(d.features, lex));
      max_score = std::max(max_score, scores.back());
    }
    double z = 0.0;
    for (double s : scores) z += std::exp(s - max_score);
    double log_z = max_score + std::log(z);

    auto handle = std::make_unique<actccg_parse_result>();
    auto classes = actccg::RankLogicalForms(std::move(all), lex);
    handle->logical_form = actccg::ToString(classes.front().logical_form);
    handle->probability = classes.front().probability;
    for (const auto& c : classes) {
      for (const auto& d : c.derivations) {
        handle->derivations.push_back(actccg::RenderDerivation(d, lex));
        handle->derivation_probabilities.push_back(
            std::exp(actccg::Score(d.features, lex) - log_z));
      }
    }
    *out = handle.release();
  });
}

void actccg_parse_result_free(actccg_parse_result* result) { delete result; }

const char* actccg_parse_result_logical_form(const actccg_parse_result* result) {
  return result ? result->logical_form.c_str() : nullptr;
}

double actccg_parse_result_probability(const actccg_parse_result* result) {
  return result ? result->probability : 0.0;
}

size_t actccg_parse_result_derivation_count(const actccg_parse_result* result) {
  return result ? result->derivations.size() : 0;
}

const char* actccg_parse_result_derivation(const actccg_parse_result* result, size_t index) {
  return result ? At(result->derivations, index) : nullptr;
}

double actccg_parse_result_derivation_probability(const actccg_parse_result* result,
                                                  size_t index) {
  if (!result || index >= result->derivation_probabilities.size()) return 0.0;
  return result->derivation_probabilities[index];
}

actccg_status actccg_axioms_load(const char* path, actccg_axioms** out) {
  if (!path) return NullArgument("path");
  if (!out) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    auto handle = std::make_unique<actccg_axioms>();
    handle->rules = actccg::LoadAxioms(path);
    *out = handle.release();
  });
}

actccg_axioms* actccg_axioms_empty(void) { return new (std::nothrow) actccg_axioms(); }

void actccg_axioms_free(actccg_axioms* axioms) { delete axioms; }

size_t actccg_axioms_size(const actccg_axioms* axioms) {
  return axioms ? axioms->rules.size() : 0;
}

actccg_status actccg_reason(const actccg_lexicon* lexicon, const char* sequence_path,
                            const actccg_axioms* axioms, int chain_per_event,
                            actccg_report** out) {
  if (!lexicon) return NullArgument("lexicon");
  if (!sequence_path) return NullArgument("sequence_path");
  if (!axioms) return NullArgument("axioms");
  if (!out) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    actccg::ReasonOptions options;
    options.chain_per_event = chain_per_event != 0;
    auto outcome = actccg::ReasonOverSequence(actccg::LoadSequence(sequence_path),
                                              lexicon->lexicon, axioms->rules, options);
    auto handle = std::make_unique<actccg_report>();
    for (const auto& e : outcome.events) handle->events.push_back(actccg::ToString(e.logical_form));
    handle->observed = ToStrings(outcome.report.observed);
    handle->deduced = ToStrings(outcome.report.deduced);
    handle->retracted = ToStrings(outcome.report.retracted);
    handle->report = std::move(outcome.report);
    *out = handle.release();
  });
}

void actccg_report_free(actccg_report* report) { delete report; }

const char* actccg_report_render(actccg_report* report, actccg_format format) {
  if (!report) return nullptr;
  report->rendered = format == ACTCCG_FORMAT_TSV ? actccg::RenderTsv(report->report)
                                                 : actccg::RenderText(report->report);
  return report->rendered.c_str();
}

size_t actccg_report_event_count(const actccg_report* report) {
  return report ? report->events.size() : 0;
}
const char* actccg_report_event(const actccg_report* report, size_t index) {
  return report ? At(report->events, index) : nullptr;
}
size_t actccg_report_deduced_count(const actccg_report* report) {
  return report ? report->deduced.size() : 0;
}
const char* actccg_report_deduced(const actccg_report* report, size_t index) {
  return report ? At(report->deduced, index) : nullptr;
}
size_t actccg_report_observed_count(const actccg_report* report) {
  return report ? report->observed.size() : 0;
}
const char* actccg_report_observed(const actccg_report* report, size_t index) {
  return report ? At(report->observed, index) : nullptr;
}
size_t actccg_report_retracted_count(const actccg_report* report) {
  return report ? report->retracted.size() : 0;
}
const char* actccg_report_retracted(const actccg_report* report, size_t index) {
  return report ? At(report->retracted, index) : nullptr;
}

actccg_status actccg_evaluate(const actccg_lexicon* lexicon, const char* sequences_dir,
                              const actccg_axioms* axioms, const char* gold_dir,
                              actccg_evaluation** out) {
  if (!lexicon) return NullArgument("lexicon");
  if (!sequences_dir) return NullArgument("sequences_dir");
  if (!axioms) return NullArgument("axioms");
  if (!gold_dir) return NullArgument("gold_dir");
  if (!out) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    std::vector<actccg::SequenceFile> sequences;
    for (const auto& p : actccg::ListFiles(sequences_dir, ".seq")) {
      sequences.push_back(actccg::LoadSequence(p));
    }
    std::vector<actccg::GoldConsequences> gold;
    for (const auto& p : actccg::ListFiles(gold_dir, ".gold")) gold.push_back(actccg::LoadGold(p));
    auto handle = std::make_unique<actccg_evaluation>();
    handle->evaluation = actccg::Evaluate(sequences, gold, lexicon->lexicon, axioms->rules);
    handle->rendered = actccg::RenderEvaluation(handle->evaluation);
    *out = handle.release();
  });
}

void actccg_evaluation_free(actccg_evaluation* evaluation) { delete evaluation; }

const char* actccg_evaluation_render(const actccg_evaluation* evaluation) {
  return evaluation ? evaluation->rendered.c_str() : nullptr;
}
size_t actccg_evaluation_gold(const actccg_evaluation* evaluation) {
  return evaluation ? evaluation->evaluation.total.gold : 0;
}
size_t actccg_evaluation_without(const actccg_evaluation* evaluation) {
  return evaluation ? evaluation->evaluation.total.without_axioms : 0;
}
size_t actccg_evaluation_with(const actccg_evaluation* evaluation) {
  return evaluation ? evaluation->evaluation.total.with_axioms : 0;
}

actccg_status actccg_generate_corpus(const char* table_path, const char* seed_path, int replicas,
                                     uint64_t rng_seed, const char* out_path, size_t* written) {
  if (!table_path) return NullArgument("table_path");
  if (!seed_path) return NullArgument("seed_path");
  if (!out_path) return NullArgument("out_path");
  return Guard([&] {
    auto table = actccg::LoadCorpus(table_path);
    auto seed = actccg::LoadLexicon(seed_path);
    auto corpus = actccg::SynthesizeCorpus(table, seed, replicas, rng_seed);
    actccg::SaveCorpus(corpus, out_path);
    if (written) *written = corpus.size();
  });
}

}  // extern "C"
