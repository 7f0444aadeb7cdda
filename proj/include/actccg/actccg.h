/* Copyright 2026 The actccg Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the actccg library.
 *
 * Every fallible call returns an actccg_status. On failure the message of the
 * most recent error on the calling thread is available from
 * actccg_last_error() and any handle out-parameter is set to NULL. Strings
 * returned by accessors are owned by the handle they came from and stay valid
 * until that handle is freed.
 */

#ifndef ACTCCG_ACTCCG_H_
#define ACTCCG_ACTCCG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ACTCCG_BUILDING_LIBRARY)
#define ACTCCG_API __attribute__((visibility("default")))
#else
#define ACTCCG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum actccg_status {
  ACTCCG_OK = 0,
  ACTCCG_ERR_SYNTAX = 1,
  ACTCCG_ERR_NO_PARSE = 2,
  ACTCCG_ERR_UNKNOWN_TOKEN = 3,
  ACTCCG_ERR_NON_TERMINATION = 4,
  ACTCCG_ERR_INDUCTION_FAILURE = 5,
  ACTCCG_ERR_DEGENERATE_CORPUS = 6,
  ACTCCG_ERR_MALFORMED_EVENT = 7,
  ACTCCG_ERR_BUDGET_EXCEEDED = 8,
  ACTCCG_ERR_RANGE_RESTRICTION = 9,
  ACTCCG_ERR_INVALID_ENTRY = 10,
  ACTCCG_ERR_ARITY_MISMATCH = 11,
  ACTCCG_ERR_IO = 12,
  ACTCCG_ERR_INVALID_ARGUMENT = 13,
  ACTCCG_ERR_INTERNAL = 99
} actccg_status;

typedef struct actccg_lexicon actccg_lexicon;
typedef struct actccg_parse_result actccg_parse_result;
typedef struct actccg_axioms actccg_axioms;
typedef struct actccg_report actccg_report;
typedef struct actccg_evaluation actccg_evaluation;

typedef enum actccg_format { ACTCCG_FORMAT_TEXT = 0, ACTCCG_FORMAT_TSV = 1 } actccg_format;

typedef struct actccg_train_config {
  int iterations;
  double learning_rate;
  double l2;
} actccg_train_config;

ACTCCG_API const char* actccg_version(void);
ACTCCG_API const char* actccg_last_error(void);
ACTCCG_API const char* actccg_status_name(actccg_status status);
ACTCCG_API void actccg_train_config_default(actccg_train_config* cfg);

/* Lexicons. Warnings found while loading or learning are kept on the handle. */
ACTCCG_API actccg_status actccg_lexicon_load(const char* path, actccg_lexicon** out);
ACTCCG_API actccg_status actccg_lexicon_save(const actccg_lexicon* lexicon, const char* path);
ACTCCG_API void actccg_lexicon_free(actccg_lexicon* lexicon);
ACTCCG_API size_t actccg_lexicon_size(const actccg_lexicon* lexicon);
ACTCCG_API const char* actccg_lexicon_entry(const actccg_lexicon* lexicon, size_t index);
ACTCCG_API size_t actccg_lexicon_diagnostic_count(const actccg_lexicon* lexicon);
ACTCCG_API const char* actccg_lexicon_diagnostic(const actccg_lexicon* lexicon, size_t index);

/* Induces entries from `corpus_path` over the seed lexicon and trains the
 * weights. `log_likelihood` may be NULL. */
ACTCCG_API actccg_status actccg_learn(const char* corpus_path, const char* seed_path,
                                      const actccg_train_config* cfg, actccg_lexicon** out,
                                      double* log_likelihood);

/* Parses a whitespace-separated sentence, adding template entries for
 * unknown tokens. */
ACTCCG_API actccg_status actccg_parse(const actccg_lexicon* lexicon, const char* sentence,
                                      actccg_parse_result** out);
ACTCCG_API void actccg_parse_result_free(actccg_parse_result* result);
ACTCCG_API const char* actccg_parse_result_logical_form(const actccg_parse_result* result);
ACTCCG_API double actccg_parse_result_probability(const actccg_parse_result* result);
/* All derivations of the sentence, argmax class first. */
ACTCCG_API size_t actccg_parse_result_derivation_count(const actccg_parse_result* result);
ACTCCG_API const char* actccg_parse_result_derivation(const actccg_parse_result* result,
                                                      size_t index);
ACTCCG_API double actccg_parse_result_derivation_probability(const actccg_parse_result* result,
                                                             size_t index);

ACTCCG_API actccg_status actccg_axioms_load(const char* path, actccg_axioms** out);
/* An empty rule set. */
ACTCCG_API actccg_axioms* actccg_axioms_empty(void);
ACTCCG_API void actccg_axioms_free(actccg_axioms* axioms);
ACTCCG_API size_t actccg_axioms_size(const actccg_axioms* axioms);

ACTCCG_API actccg_status actccg_reason(const actccg_lexicon* lexicon, const char* sequence_path,
                                       const actccg_axioms* axioms, int chain_per_event,
                                       actccg_report** out);
ACTCCG_API void actccg_report_free(actccg_report* report);
ACTCCG_API const char* actccg_report_render(actccg_report* report, actccg_format format);
ACTCCG_API size_t actccg_report_event_count(const actccg_report* report);
ACTCCG_API const char* actccg_report_event(const actccg_report* report, size_t index);
ACTCCG_API size_t actccg_report_deduced_count(const actccg_report* report);
ACTCCG_API const char* actccg_report_deduced(const actccg_report* report, size_t index);
ACTCCG_API size_t actccg_report_observed_count(const actccg_report* report);
ACTCCG_API const char* actccg_report_observed(const actccg_report* report, size_t index);
ACTCCG_API size_t actccg_report_retracted_count(const actccg_report* report);
ACTCCG_API const char* actccg_report_retracted(const actccg_report* report, size_t index);

/* Every `*.seq` file in `sequences_dir` is scored against `<name>.gold` in
 * `gold_dir`. */
ACTCCG_API actccg_status actccg_evaluate(const actccg_lexicon* lexicon, const char* sequences_dir,
                                         const actccg_axioms* axioms, const char* gold_dir,
                                         actccg_evaluation** out);
ACTCCG_API void actccg_evaluation_free(actccg_evaluation* evaluation);
ACTCCG_API const char* actccg_evaluation_render(const actccg_evaluation* evaluation);
ACTCCG_API size_t actccg_evaluation_gold(const actccg_evaluation* evaluation);
ACTCCG_API size_t actccg_evaluation_without(const actccg_evaluation* evaluation);
ACTCCG_API size_t actccg_evaluation_with(const actccg_evaluation* evaluation);

/* Replicates a table corpus with varied objects and writes it to `out_path`.
 * `written` may be NULL. */
ACTCCG_API actccg_status actccg_generate_corpus(const char* table_path, const char* seed_path,
                                                int replicas, uint64_t rng_seed,
                                                const char* out_path, size_t* written);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* ACTCCG_ACTCCG_H_ */
