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

// Text formats for lexicons, corpora, triplet sequences, gold consequence
// lists and axiom files. All parsers take the whole file contents; the Load*
// and Save* wrappers only add file access. Line-level problems raise
// SyntaxError with the 1-based line number.

#ifndef ACTCCG_CORPUS_IO_HPP_
#define ACTCCG_CORPUS_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "actccg/error.hpp"
#include "actccg/grammar.hpp"
#include "actccg/learner.hpp"
#include "actccg/reasoner.hpp"

namespace actccg {

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// `Token := CATEGORY : TERM [@ weight]`, `#` starts a comment. Duplicate
// entries are merged and reported in `diagnostics`.
Lexicon ParseLexicon(std::string_view text, Diagnostics* diagnostics = nullptr);
std::string SerializeLexicon(const Lexicon& lexicon);
Lexicon LoadLexicon(const std::filesystem::path& path, Diagnostics* diagnostics = nullptr);
void SaveLexicon(const Lexicon& lexicon, const std::filesystem::path& path);

// `subject action patient<TAB>term`
std::vector<TrainingSample> ParseCorpus(std::string_view text);
std::string SerializeCorpus(const std::vector<TrainingSample>& corpus);
std::vector<TrainingSample> LoadCorpus(const std::filesystem::path& path);
void SaveCorpus(const std::vector<TrainingSample>& corpus, const std::filesystem::path& path);

struct Triplet {
  std::string subject;
  std::string action;
  std::string patient;
  std::size_t line = 0;

  std::vector<std::string> Tokens() const { return {subject, action, patient}; }
};

struct SequenceFile {
  std::string name;
  std::vector<Triplet> triplets;
};

// One `subject action patient` triplet per line. A file with no triplets
// raises SyntaxError.
SequenceFile ParseSequence(std::string_view text, std::string name);
std::string SerializeSequence(const SequenceFile& sequence);
// The sequence is named after the file stem.
SequenceFile LoadSequence(const std::filesystem::path& path);

struct GoldConsequences {
  std::string name;
  std::vector<Literal> literals;
};

// One ground literal per line; duplicates are dropped.
GoldConsequences ParseGold(std::string_view text, std::string name);
std::string SerializeGold(const GoldConsequences& gold);
GoldConsequences LoadGold(const std::filesystem::path& path);

std::vector<AxiomRule> ParseAxioms(std::string_view text);
std::string SerializeAxioms(const std::vector<AxiomRule>& axioms);
std::vector<AxiomRule> LoadAxioms(const std::filesystem::path& path);

// Files with `extension` in `dir`, sorted by name.
std::vector<std::filesystem::path> ListFiles(const std::filesystem::path& dir,
                                             std::string_view extension);

// Replicates `table` `replicas` times. Replica 0 is the table itself; each
// later replica swaps the subject and patient of every row for two distinct
// objects drawn from the N entries of `seed`, re-instantiating the gold form
// through inverse-lambda. Deterministic for a given `rng_seed`.
std::vector<TrainingSample> SynthesizeCorpus(const std::vector<TrainingSample>& table,
                                             const Lexicon& seed, int replicas,
                                             std::uint64_t rng_seed);

}  // namespace actccg

#endif  // ACTCCG_CORPUS_IO_HPP_
