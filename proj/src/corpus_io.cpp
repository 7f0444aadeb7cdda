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

#include "actccg/corpus_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace actccg {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view StripComment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

// Calls fn(line_number, content) for every non-blank line, comments removed.
// SyntaxErrors raised by fn are re-raised with the line number.
template <typename Fn>
void ForEachLine(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    line = Trim(StripComment(line));
    if (line.empty()) continue;
    try {
      fn(line_no, line);
    } catch (const SyntaxError& e) {
      if (e.is_line()) throw;
      throw SyntaxError(e.detail(), line_no, true);
    }
  }
}

std::vector<std::string> SplitWords(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

double ParseWeight(std::string_view s) {
  s = Trim(s);
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(w)) {
    throw SyntaxError("invalid weight '" + std::string(s) + "'", 0);
  }
  return w;
}

LexEntry ParseLexiconLine(std::string_view line) {
  auto assign = line.find(":=");
  if (assign == std::string_view::npos) throw SyntaxError("expected ':='", 0);
  std::string_view token = Trim(line.substr(0, assign));
  if (token.empty() || SplitWords(token).size() != 1) {
    throw SyntaxError("token must be a single word", 0);
  }
  std::string_view rest = line.substr(assign + 2);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw SyntaxError("expected ':' after category", 0);
  std::string_view category = Trim(rest.substr(0, colon));
  std::string_view term = rest.substr(colon + 1);
  double weight = 0.0;
  auto at = term.rfind('@');
  if (at != std::string_view::npos) {
    weight = ParseWeight(term.substr(at + 1));
    term = term.substr(0, at);
  }
  return LexEntry{std::string(token), ParseCategory(category), ParseTerm(Trim(term)), weight,
                  Provenance::kSeed};
}

template <typename T, typename Parser>
T LoadWith(const std::filesystem::path& path, Parser parse) {
  std::string text = ReadFile(path);
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(path.string() + ": " + e.detail(), e.position(), e.is_line());
  }
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

Lexicon ParseLexicon(std::string_view text, Diagnostics* diagnostics) {
  Lexicon lexicon;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    LexEntry entry = ParseLexiconLine(line);
    std::string shown = ToString(entry);
    Lexicon::AddResult r;
    try {
      r = lexicon.Add(std::move(entry));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kSyntax) throw;
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (r != Lexicon::AddResult::kAdded && diagnostics) {
      diagnostics->push_back({line_no, "duplicate entry merged: " + shown});
    }
  });
  return lexicon;
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  std::string out;
  for (const LexEntry& e : lexicon.entries()) out += ToString(e) + "\n";
  return out;
}

Lexicon LoadLexicon(const std::filesystem::path& path, Diagnostics* diagnostics) {
  return LoadWith<Lexicon>(path, [&](std::string_view t) { return ParseLexicon(t, diagnostics); });
}

void SaveLexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  WriteFile(path, SerializeLexicon(lexicon));
}

std::vector<TrainingSample> ParseCorpus(std::string_view text) {
  std::vector<TrainingSample> out;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw SyntaxError("expected a tab before the logical form", 0);
    std::vector<std::string> tokens = SplitWords(line.substr(0, tab));
    if (tokens.size() != 3) throw SyntaxError("expected 'subject action patient'", 0);
    out.push_back(TrainingSample{std::move(tokens), ParseTerm(Trim(line.substr(tab + 1))), line_no});
  });
  return out;
}

std::string SerializeCorpus(const std::vector<TrainingSample>& corpus) {
  std::string out;
  for (const TrainingSample& s : corpus) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (i) out += ' ';
      out += s.tokens[i];
    }
    out += '\t' + ToString(s.gold) + '\n';
  }
  return out;
}

std::vector<TrainingSample> LoadCorpus(const std::filesystem::path& path) {
  return LoadWith<std::vector<TrainingSample>>(path, [](std::string_view t) { return ParseCorpus(t); });
}

void SaveCorpus(const std::vector<TrainingSample>& corpus, const std::filesystem::path& path) {
  WriteFile(path, SerializeCorpus(corpus));
}

SequenceFile ParseSequence(std::string_view text, std::string name) {
  SequenceFile seq{std::move(name), {}};
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    std::vector<std::string> w = SplitWords(line);
    if (w.size() != 3) throw SyntaxError("expected 'subject action patient'", 0);
    seq.triplets.push_back(Triplet{w[0], w[1], w[2], line_no});
  });
  if (seq.triplets.empty()) throw SyntaxError("sequence '" + seq.name + "' has no triplets", 0);
  return seq;
}

std::string SerializeSequence(const SequenceFile& sequence) {
  std::string out;
  for (const Triplet& t : sequence.triplets) {
    out += t.subject + ' ' + t.action + ' ' + t.patient + '\n';
  }
  return out;
}

SequenceFile LoadSequence(const std::filesystem::path& path) {
  std::string name = path.stem().string();
  return LoadWith<SequenceFile>(path, [&](std::string_view t) { return ParseSequence(t, name); });
}

GoldConsequences ParseGold(std::string_view text, std::string name) {
  GoldConsequences gold{std::move(name), {}};
  std::set<Literal> seen;
  ForEachLine(text, [&](std::size_t, std::string_view line) {
    Literal lit = ParseLiteral(line);
    for (const std::string& a : lit.args) {
      if (std::isupper(static_cast<unsigned char>(a[0]))) {
        throw SyntaxError("gold literals must be ground: " + ToString(lit), 0);
      }
    }
    if (seen.insert(lit).second) gold.literals.push_back(std::move(lit));
  });
  return gold;
}

std::string SerializeGold(const GoldConsequences& gold) {
  std::string out;
  for (const Literal& l : gold.literals) out += ToString(l) + '\n';
  return out;
}

GoldConsequences LoadGold(const std::filesystem::path& path) {
  std::string name = path.stem().string();
  return LoadWith<GoldConsequences>(path, [&](std::string_view t) { return ParseGold(t, name); });
}

std::vector<AxiomRule> ParseAxioms(std::string_view text) {
  std::vector<AxiomRule> out;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    try {
      out.push_back(ParseAxiom(line));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kSyntax) throw;
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return out;
}

std::string SerializeAxioms(const std::vector<AxiomRule>& axioms) {
  std::string out;
  for (const AxiomRule& r : axioms) out += ToString(r) + '\n';
  return out;
}

std::vector<AxiomRule> LoadAxioms(const std::filesystem::path& path) {
  return LoadWith<std::vector<AxiomRule>>(path, [](std::string_view t) { return ParseAxioms(t); });
}

std::vector<std::filesystem::path> ListFiles(const std::filesystem::path& dir,
                                             std::string_view extension) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot list " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> out;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == extension) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TrainingSample> SynthesizeCorpus(const std::vector<TrainingSample>& table,
                                             const Lexicon& seed, int replicas,
                                             std::uint64_t rng_seed) {
  if (replicas < 1) throw Error(ErrorCode::kInvalidArgument, "replicas must be at least 1");
  struct Object {
    std::string token;
    Term constant;
  };
  std::vector<Object> pool;
  std::set<std::string> pooled;
  for (const LexEntry& e : seed.entries()) {
    if (e.category.IsAtomic() && e.category.atom() == Atom::kN && pooled.insert(TokenKey(e.token)).second) {
      pool.push_back(Object{TokenKey(e.token), e.semantics});
    }
  }
  if (replicas > 1 && pool.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "seed lexicon needs at least two objects to vary");
  }
  auto constant_of = [&](const std::string& token) -> Term {
    for (EntryId id : seed.Candidates(token)) {
      const LexEntry& e = seed.entry(id);
      if (e.category.IsAtomic() && e.category.atom() == Atom::kN) return e.semantics;
    }
    throw Error(ErrorCode::kUnknownToken, "no N entry for '" + token + "' in the seed lexicon");
  };

  std::mt19937_64 rng(rng_seed);
  std::vector<TrainingSample> out = table;
  for (int r = 1; r < replicas; ++r) {
    for (const TrainingSample& row : table) {
      if (row.tokens.size() != 3) throw Error(ErrorCode::kInvalidArgument, "table rows must be triplets");
      InverseResult over_patient = InverseLambda(row.gold, constant_of(row.tokens[2]), "y");
      InverseResult over_subject =
          InverseLambda(over_patient.function, constant_of(row.tokens[0]), "x");
      std::size_t s = rng() % pool.size();
      std::size_t p = rng() % (pool.size() - 1);
      if (p >= s) ++p;
      Term gold = BetaReduce(Term::App(Term::App(over_subject.function, pool[s].constant),
                                       pool[p].constant));
      out.push_back(
          TrainingSample{{pool[s].token, row.tokens[1], pool[p].token}, std::move(gold), 0});
    }
  }
  return out;
}

}  // namespace actccg
