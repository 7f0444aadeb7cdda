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

#include "actccg/learner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <set>

namespace actccg {
namespace {

double LogSumExp(const std::vector<double>& xs) {
  double m = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

bool ContainsSubterm(const Term& t, const Term& needle) {
  if (AlphaEqual(t, needle)) return true;
  for (const Term& c : t.children()) {
    if (ContainsSubterm(c, needle)) return true;
  }
  return false;
}

// The N entry of `token` whose constant occurs in `gold`.
const LexEntry* EntityEntry(const Lexicon& lexicon, const std::string& token,
                            const Term& gold) {
  const LexEntry* fallback = nullptr;
  for (EntryId id : lexicon.Candidates(token)) {
    const LexEntry& e = lexicon.entry(id);
    if (!e.category.IsAtomic() || e.category.atom() != Atom::kN) continue;
    if (ContainsSubterm(gold, e.semantics)) return &e;
    if (!fallback) fallback = &e;
  }
  return fallback;
}

std::string DisplayToken(const std::string& token) {
  std::string out = token;
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string PredicateName(const std::string& token) {
  std::string out = TokenKey(token);
  for (char& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') c = '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "_" + out;
  return out;
}

Term WrapVacuous(const Term& t, std::string_view preferred) {
  return Term::Lam(FreshName(preferred, AllVarNames(t)), t);
}

}  // namespace

void ValidateConfig(const TrainConfig& cfg) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "invalid training config: " + what);
  };
  if (cfg.iterations <= 0) fail("iterations must be positive");
  if (!(cfg.learning_rate > 0.0) || !std::isfinite(cfg.learning_rate)) {
    fail("learning rate must be positive and finite");
  }
  if (!(cfg.l2 >= 0.0) || !std::isfinite(cfg.l2)) fail("l2 must be non-negative and finite");
  if (cfg.step_budget == 0) fail("step budget must be positive");
}

Category ActionCategory() {
  return Category::Forward(
      Category::Backward(Category::Atomic(Atom::kAP), Category::Atomic(Atom::kNP)),
      Category::Atomic(Atom::kNP));
}

std::vector<LexEntry> InduceEntries(const TrainingSample& sample, const Lexicon& lexicon,
                                    const InductionOptions& options) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kInductionFailure, "cannot induce entry for '" +
                                                   (sample.tokens.size() > 1 ? sample.tokens[1] : "") +
                                                   "': " + why);
  };
  if (sample.tokens.size() != 3) throw fail("expected a subject action patient triplet");
  const LexEntry* subject = EntityEntry(lexicon, sample.tokens[0], sample.gold);
  const LexEntry* patient = EntityEntry(lexicon, sample.tokens[2], sample.gold);
  if (!subject) throw fail("subject '" + sample.tokens[0] + "' has no N entry");
  if (!patient) throw fail("patient '" + sample.tokens[2] + "' has no N entry");

  const Term& gold = sample.gold;
  InverseResult over_patient = InverseLambda(gold, patient->semantics, "y");
  const std::string& y = over_patient.function.name();
  InverseResult over_subject = InverseLambda(over_patient.function.body(), subject->semantics, "x");
  Term general = Term::Lam(over_subject.function.name(), Term::Lam(y, over_subject.function.body()));

  std::vector<Term> candidates{general};
  if (options.specific_candidates) {
    // Subject kept constant: \x.\y. gold[patient := y].
    candidates.push_back(WrapVacuous(over_patient.function, "x"));
    // Patient kept constant: \x.\y. gold[subject := x].
    InverseResult only_subject = InverseLambda(gold, subject->semantics, "x");
    Term inner = WrapVacuous(only_subject.function.body(), "y");
    candidates.push_back(Term::Lam(only_subject.function.name(), inner));
  }

  const std::string token = DisplayToken(sample.tokens[1]);
  const Category category = ActionCategory();
  std::vector<LexEntry> out;
  std::set<std::string> seen;
  for (const Term& raw : candidates) {
    Term semantics = Canonicalize(raw);
    if (!seen.insert(AlphaKey(semantics)).second) continue;
    LexEntry entry{token, category, semantics, 0.0, Provenance::kLearned};

    Lexicon check;
    check.Add(*subject);
    check.Add(*patient);
    check.Add(entry);
    bool round_trip = false;
    try {
      for (const Derivation& d : ParseAll(sample.tokens, check)) {
        round_trip = round_trip || AlphaEqual(d.sign.semantics, gold);
      }
    } catch (const Error&) {
      round_trip = false;
    }
    if (!round_trip) {
      throw fail("candidate " + ToString(semantics) + " does not reproduce " + ToString(gold));
    }
    if (!lexicon.Find(token, category, semantics)) out.push_back(std::move(entry));
  }
  return out;
}

Lexicon InduceLexicon(const std::vector<TrainingSample>& corpus, const Lexicon& seed,
                      Diagnostics* diagnostics, const InductionOptions& options) {
  Lexicon lexicon = seed;
  for (const TrainingSample& sample : corpus) {
    try {
      for (LexEntry& e : InduceEntries(sample, lexicon, options)) lexicon.Add(std::move(e));
    } catch (const Error& e) {
      if (diagnostics) diagnostics->push_back({sample.line, e.what()});
    }
  }
  return lexicon;
}

Lexicon InjectTemplates(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                        double unknown_penalty) {
  static const std::regex kObject("object_[0-9]+");
  Lexicon out = lexicon;
  for (const std::string& token : tokens) {
    if (out.Contains(token)) continue;
    std::string key = TokenKey(token);
    if (std::regex_match(key, kObject)) {
      out.Add(LexEntry{token, Category::Atomic(Atom::kN), Term::Const(key), 0.0,
                       Provenance::kTemplate});
    } else {
      Term body = Term::Pred(PredicateName(token), {Term::Var("x"), Term::Var("y")});
      out.Add(LexEntry{token, ActionCategory(), Term::Lam("x", Term::Lam("y", body)),
                       unknown_penalty, Provenance::kTemplate});
    }
  }
  return out;
}

Objective::Objective(const std::vector<TrainingSample>& corpus, const Lexicon& lexicon,
                     double l2, std::size_t step_budget, Diagnostics* diagnostics)
    : dimension_(lexicon.size()), l2_(l2) {
  ParseOptions options;
  options.step_budget = step_budget;
  for (const TrainingSample& sample : corpus) {
    Parsed parsed;
    try {
      std::string gold_key = AlphaKey(sample.gold);
      for (const Derivation& d : ParseAll(sample.tokens, lexicon, options)) {
        parsed.features.push_back(d.features);
        parsed.gold.push_back(AlphaKey(d.sign.semantics) == gold_key);
      }
    } catch (const Error& e) {
      if (diagnostics) diagnostics->push_back({sample.line, std::string("skipped: ") + e.what()});
      continue;
    }
    if (std::find(parsed.gold.begin(), parsed.gold.end(), true) == parsed.gold.end()) {
      if (diagnostics) {
        diagnostics->push_back({sample.line, "skipped: no derivation reaches " + ToString(sample.gold)});
      }
      continue;
    }
    samples_.push_back(std::move(parsed));
  }
}

namespace {

double Dot(const FeatureCounts& f, std::span<const double> w) {
  double s = 0.0;
  for (const auto& [id, count] : f) s += count * w[id];
  return s;
}

}  // namespace

double Objective::Value(std::span<const double> weights) const {
  double total = 0.0;
  for (const Parsed& s : samples_) {
    std::vector<double> all, gold;
    for (std::size_t i = 0; i < s.features.size(); ++i) {
      double score = Dot(s.features[i], weights);
      all.push_back(score);
      if (s.gold[i]) gold.push_back(score);
    }
    total += LogSumExp(gold) - LogSumExp(all);
  }
  double norm = 0.0;
  for (double w : weights) norm += w * w;
  return total - 0.5 * l2_ * norm;
}

std::vector<double> Objective::Gradient(std::span<const double> weights) const {
  std::vector<double> grad(dimension_, 0.0);
  for (const Parsed& s : samples_) {
    std::vector<double> scores;
    std::vector<double> gold_scores;
    for (std::size_t i = 0; i < s.features.size(); ++i) {
      scores.push_back(Dot(s.features[i], weights));
      if (s.gold[i]) gold_scores.push_back(scores.back());
    }
    double log_z = LogSumExp(scores);
    double log_zg = LogSumExp(gold_scores);
    for (std::size_t i = 0; i < s.features.size(); ++i) {
      double p_all = std::exp(scores[i] - log_z);
      double p_gold = s.gold[i] ? std::exp(scores[i] - log_zg) : 0.0;
      for (const auto& [id, count] : s.features[i]) grad[id] += count * (p_gold - p_all);
    }
  }
  for (std::size_t i = 0; i < dimension_; ++i) grad[i] -= l2_ * weights[i];
  return grad;
}

TrainResult Train(const std::vector<TrainingSample>& corpus, const Lexicon& lexicon,
                  const TrainConfig& cfg, Diagnostics* diagnostics) {
  ValidateConfig(cfg);
  Objective objective(corpus, lexicon, cfg.l2, cfg.step_budget, diagnostics);
  if (objective.usable_samples() == 0) {
    throw Error(ErrorCode::kDegenerateCorpus, "no training sample parses to its gold form");
  }
  std::vector<double> w(lexicon.size(), 0.0);
  TrainResult result{lexicon, 0.0, {}, objective.usable_samples()};
  for (int it = 0; it < cfg.iterations; ++it) {
    result.history.push_back(objective.Value(w));
    std::vector<double> g = objective.Gradient(w);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += cfg.learning_rate * g[i];
  }
  result.log_likelihood = objective.Value(w);
  result.history.push_back(result.log_likelihood);
  result.lexicon.SetWeights(w);
  return result;
}

std::optional<EntryId> BestEntry(const Lexicon& lexicon, std::string_view token) {
  std::optional<EntryId> best;
  for (EntryId id : lexicon.Candidates(token)) {
    if (!best || lexicon.entry(id).weight > lexicon.entry(*best).weight) best = id;
  }
  return best;
}

}  // namespace actccg
