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

// actccg-cli: learn, parse, reason, eval and gen-corpus subcommands.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "actccg/actccg.h"

namespace {

// Thrown to unwind with the library's last error.
struct Failure {};

void Check(actccg_status status) {
  if (status != ACTCCG_OK) throw Failure{};
}

struct LexiconDeleter {
  void operator()(actccg_lexicon* p) const { actccg_lexicon_free(p); }
};
struct AxiomsDeleter {
  void operator()(actccg_axioms* p) const { actccg_axioms_free(p); }
};
using LexiconPtr = std::unique_ptr<actccg_lexicon, LexiconDeleter>;
using AxiomsPtr = std::unique_ptr<actccg_axioms, AxiomsDeleter>;

LexiconPtr LoadLexicon(const std::string& path, bool verbose) {
  actccg_lexicon* lex = nullptr;
  Check(actccg_lexicon_load(path.c_str(), &lex));
  LexiconPtr owned(lex);
  if (verbose) {
    for (size_t i = 0; i < actccg_lexicon_diagnostic_count(lex); ++i) {
      std::cerr << "warning: " << actccg_lexicon_diagnostic(lex, i) << '\n';
    }
  }
  return owned;
}

AxiomsPtr LoadAxioms(const std::string& path) {
  actccg_axioms* axioms = nullptr;
  Check(actccg_axioms_load(path.c_str(), &axioms));
  return AxiomsPtr(axioms);
}

std::string FixedProbability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", p);
  return buf;
}

// Keeps it to a single line.
std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic parsing and reasoning over manipulation action triplets", "actccg-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print load and training warnings to stderr");

  std::string corpus, seed, out, lexicon, sequence, axioms, sequences_dir, gold_dir, table;
  std::string sentence;
  std::string format = "text";
  actccg_train_config train;
  actccg_train_config_default(&train);
  bool all_derivations = false;
  bool chain_per_event = false;
  int replicas = 15;
  std::uint64_t rng_seed = 0;

  CLI::App* learn = app.add_subcommand("learn", "Induce a lexicon from a corpus and train weights");
  learn->add_option("--corpus", corpus, "Training corpus")->required();
  learn->add_option("--seed", seed, "Seed lexicon")->required();
  learn->add_option("--out", out, "Output lexicon")->required();
  learn->add_option("--iters", train.iterations, "Gradient steps")->check(CLI::PositiveNumber);
  learn->add_option("--lr", train.learning_rate, "Learning rate")->check(CLI::PositiveNumber);
  learn->add_option("--l2", train.l2, "L2 penalty")->check(CLI::NonNegativeNumber);

  CLI::App* parse = app.add_subcommand("parse", "Parse a sentence and print the best logical form");
  parse->add_option("--lexicon", lexicon, "Lexicon file")->required();
  parse->add_option("sentence", sentence, "Tokens, e.g. \"Knife Cut Cucumber\"")->required();
  parse->add_flag("--all-derivations", all_derivations, "Also print every derivation tree");

  CLI::App* reason = app.add_subcommand("reason", "Parse a triplet sequence and chain the axioms");
  reason->add_option("--lexicon", lexicon, "Lexicon file")->required();
  reason->add_option("--sequence", sequence, "Triplet sequence file")->required();
  reason->add_option("--axioms", axioms, "Axiom file")->required();
  reason->add_flag("--chain-per-event", chain_per_event, "Chain after every event");
  reason->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}));

  CLI::App* eval = app.add_subcommand("eval", "Score sequences against gold consequences");
  eval->add_option("--lexicon", lexicon, "Lexicon file")->required();
  eval->add_option("--sequences", sequences_dir, "Directory of .seq files")->required();
  eval->add_option("--axioms", axioms, "Axiom file")->required();
  eval->add_option("--gold", gold_dir, "Directory of .gold files")->required();

  CLI::App* gen = app.add_subcommand("gen-corpus", "Replicate a table corpus with varied objects");
  gen->add_option("--table", table, "Table corpus")->required();
  gen->add_option("--seed", seed, "Seed lexicon with the object pool")->required();
  gen->add_option("--replicas", replicas, "Number of replicas, including the table")
      ->check(CLI::PositiveNumber);
  gen->add_option("--rng-seed", rng_seed, "Random seed");
  gen->add_option("--out", out, "Output corpus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << OneLine(e.what()) << '\n';
    return 2;
  }

  try {
    if (*learn) {
      actccg_lexicon* raw = nullptr;
      double ll = 0.0;
      Check(actccg_learn(corpus.c_str(), seed.c_str(), &train, &raw, &ll));
      LexiconPtr learned(raw);
      if (verbose) {
        for (size_t i = 0; i < actccg_lexicon_diagnostic_count(raw); ++i) {
          std::cerr << "warning: " << actccg_lexicon_diagnostic(raw, i) << '\n';
        }
      }
      Check(actccg_lexicon_save(raw, out.c_str()));
      std::ostringstream line;
      line.precision(6);
      line << std::fixed << "log-likelihood: " << ll;
      std::cout << line.str() << '\n';
    } else if (*parse) {
      LexiconPtr lex = LoadLexicon(lexicon, verbose);
      actccg_parse_result* result = nullptr;
      Check(actccg_parse(lex.get(), sentence.c_str(), &result));
      std::cout << actccg_parse_result_logical_form(result)
                << "  p=" << FixedProbability(actccg_parse_result_probability(result)) << '\n';
      if (all_derivations) {
        size_t n = actccg_parse_result_derivation_count(result);
        for (size_t i = 0; i < n; ++i) {
          std::cout << "\nderivation " << (i + 1) << " of " << n << "  p="
                    << FixedProbability(actccg_parse_result_derivation_probability(result, i))
                    << '\n'
                    << actccg_parse_result_derivation(result, i) << '\n';
        }
      }
      actccg_parse_result_free(result);
    } else if (*reason) {
      LexiconPtr lex = LoadLexicon(lexicon, verbose);
      AxiomsPtr rules = LoadAxioms(axioms);
      actccg_report* report = nullptr;
      Check(actccg_reason(lex.get(), sequence.c_str(), rules.get(), chain_per_event ? 1 : 0,
                          &report));
      if (format == "tsv") {
        std::cout << actccg_report_render(report, ACTCCG_FORMAT_TSV);
      } else {
        size_t n = actccg_report_event_count(report);
        std::cout << "events (" << n << "):\n";
        for (size_t i = 0; i < n; ++i) std::cout << "  " << actccg_report_event(report, i) << '\n';
        std::cout << actccg_report_render(report, ACTCCG_FORMAT_TEXT);
      }
      actccg_report_free(report);
    } else if (*eval) {
      LexiconPtr lex = LoadLexicon(lexicon, verbose);
      AxiomsPtr rules = LoadAxioms(axioms);
      actccg_evaluation* ev = nullptr;
      Check(actccg_evaluate(lex.get(), sequences_dir.c_str(), rules.get(), gold_dir.c_str(), &ev));
      std::cout << actccg_evaluation_render(ev);
      actccg_evaluation_free(ev);
    } else if (*gen) {
      size_t written = 0;
      Check(actccg_generate_corpus(table.c_str(), seed.c_str(), replicas, rng_seed, out.c_str(),
                                   &written));
      std::cout << "wrote " << written << " samples to " << out << '\n';
    }
  } catch (const Failure&) {
    std::cerr << "error: " << OneLine(actccg_last_error()) << '\n';
    return 1;
  }
  return 0;
}
