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

#include "actccg/parser.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "actccg/error.hpp"

namespace actccg {

FeatureCounts MergeCounts(const FeatureCounts& a, const FeatureCounts& b) {
  FeatureCounts out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

double Score(const FeatureCounts& features, const Lexicon& lexicon) {
  double s = 0.0;
  for (const auto& [id, count] : features) s += count * lexicon.entry(id).weight;
  return s;
}

namespace {

struct ItemRef {
  std::size_t cell;
  std::size_t index;
};

struct BackPointer {
  Derivation::Rule rule;
  EntryId entry = 0;
  ItemRef left{};
  ItemRef right{};
};

struct Item {
  Sign sign;
  std::string alpha;
  FeatureCounts features;
  std::vector<BackPointer> back;
};

class Chart {
 public:
  Chart(const std::vector<std::string>& tokens, const Lexicon& lexicon,
        const ParseOptions& options)
      : tokens_(tokens),
        lexicon_(lexicon),
        options_(options),
        n_(tokens.size()),
        cells_((n_ + 1) * (n_ + 1)),
        memo_((n_ + 1) * (n_ + 1)) {}

  void Fill() {
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t cell = Index(i, i + 1);
      for (EntryId id : lexicon_.Candidates(tokens_[i])) {
        const LexEntry& e = lexicon_.entry(id);
        BackPointer bp{Derivation::Rule::kLexical, id};
        Add(cell, Sign{e.category, e.semantics}, FeatureCounts{{id, 1}}, bp);
      }
      Close(cell);
    }
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        std::size_t j = i + len;
        std::size_t cell = Index(i, j);
        for (std::size_t m = i + 1; m < j; ++m) {
          std::size_t lc = Index(i, m);
          std::size_t rc = Index(m, j);
          for (std::size_t a = 0; a < cells_[lc].size(); ++a) {
            for (std::size_t b = 0; b < cells_[rc].size(); ++b) {
              const Item& left = cells_[lc][a];
              const Item& right = cells_[rc][b];
              auto combined = Combine(left.sign, right.sign, options_.step_budget);
              if (!combined) continue;
              Derivation::Rule rule = left.sign.category.slash() == Slash::kForward &&
                                              left.sign.category.argument() ==
                                                  right.sign.category
                                          ? Derivation::Rule::kForward
                                          : Derivation::Rule::kBackward;
              BackPointer bp{rule, 0, {lc, a}, {rc, b}};
              FeatureCounts features = MergeCounts(left.features, right.features);
              Add(cell, std::move(*combined), std::move(features), bp);
            }
          }
        }
        Close(cell);
      }
    }
  }

  std::vector<Derivation> Roots() {
    std::vector<Derivation> out;
    std::size_t cell = Index(0, n_);
    for (std::size_t k = 0; k < cells_[cell].size(); ++k) {
      const Item& item = cells_[cell][k];
      if (!item.sign.category.IsAtomic() || item.sign.category.atom() != options_.goal) {
        continue;
      }
      for (const auto& d : Expand({cell, k})) out.push_back(*d);
    }
    return out;
  }

 private:
  std::size_t Index(std::size_t i, std::size_t j) const { return i * (n_ + 1) + j; }

  std::pair<std::size_t, std::size_t> Span(std::size_t cell) const {
    return {cell / (n_ + 1), cell % (n_ + 1)};
  }

  void Add(std::size_t cell, Sign sign, FeatureCounts features, const BackPointer& bp) {
    std::string alpha = AlphaKey(sign.semantics);
    for (Item& item : cells_[cell]) {
      if (item.sign.category == sign.category && item.alpha == alpha &&
          item.features == features) {
        item.back.push_back(bp);
        return;
      }
    }
    cells_[cell].push_back(Item{std::move(sign), std::move(alpha), std::move(features), {bp}});
  }

  // Unary closure: one N => NP step per item.
  void Close(std::size_t cell) {
    std::size_t count = cells_[cell].size();
    for (std::size_t k = 0; k < count; ++k) {
      auto projected = UnaryProject(cells_[cell][k].sign);
      if (!projected) continue;
      FeatureCounts features = cells_[cell][k].features;
      Add(cell, std::move(*projected), std::move(features),
          BackPointer{Derivation::Rule::kUnary, 0, {cell, k}, {}});
    }
  }

  const std::vector<std::shared_ptr<const Derivation>>& Expand(ItemRef ref) {
    auto& memo = memo_[ref.cell];
    if (memo.size() <= ref.index) memo.resize(cells_[ref.cell].size());
    if (memo[ref.index]) return *memo[ref.index];
    const Item& item = cells_[ref.cell][ref.index];
    auto [begin, end] = Span(ref.cell);
    std::vector<std::shared_ptr<const Derivation>> out;
    auto node = [&](Derivation::Rule rule) {
      return std::make_shared<Derivation>(
          Derivation{rule, begin, end, item.sign, 0, {}, item.features});
    };
    for (const BackPointer& bp : item.back) {
      switch (bp.rule) {
        case Derivation::Rule::kLexical: {
          auto d = node(bp.rule);
          d->entry = bp.entry;
          out.push_back(std::move(d));
          break;
        }
        case Derivation::Rule::kUnary:
          for (const auto& child : Expand(bp.left)) {
            auto d = node(bp.rule);
            d->children = {child};
            out.push_back(std::move(d));
          }
          break;
        default: {
          const auto lefts = Expand(bp.left);
          const auto rights = Expand(bp.right);
          for (const auto& l : lefts) {
            for (const auto& r : rights) {
              auto d = node(bp.rule);
              d->children = {l, r};
              out.push_back(std::move(d));
            }
          }
          break;
        }
      }
    }
    memo[ref.index] =
        std::make_unique<std::vector<std::shared_ptr<const Derivation>>>(std::move(out));
    return *memo[ref.index];
  }

  const std::vector<std::string>& tokens_;
  const Lexicon& lexicon_;
  ParseOptions options_;
  std::size_t n_;
  std::vector<std::vector<Item>> cells_;
  std::vector<std::vector<std::unique_ptr<std::vector<std::shared_ptr<const Derivation>>>>>
      memo_;
};

double LogSumExp(const std::vector<double>& xs) {
  double m = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
  return s;
}

void RenderInto(const Derivation& d, const Lexicon& lexicon, std::size_t depth,
                std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << '(' << ToString(d.sign.category) << ' ';
  switch (d.rule) {
    case Derivation::Rule::kLexical: out << "lex"; break;
    case Derivation::Rule::kUnary: out << "unary"; break;
    case Derivation::Rule::kForward: out << '>'; break;
    case Derivation::Rule::kBackward: out << '<'; break;
  }
  out << " : " << ToString(d.sign.semantics);
  if (d.rule == Derivation::Rule::kLexical) {
    out << " [" << lexicon.entry(d.entry).token << "]";
  }
  for (const auto& c : d.children) {
    out << '\n';
    RenderInto(*c, lexicon, depth + 1, out);
  }
  out << ')';
}

}  // namespace

std::vector<Derivation> ParseAll(const std::vector<std::string>& tokens,
                                 const Lexicon& lexicon, const ParseOptions& options) {
  if (tokens.empty()) throw Error(ErrorCode::kInvalidArgument, "empty token sequence");
  std::vector<std::string> unknown;
  for (const auto& t : tokens) {
    if (!lexicon.Contains(t)) unknown.push_back(t);
  }
  if (!unknown.empty()) throw UnknownTokenError(std::move(unknown));
  Chart chart(tokens, lexicon, options);
  chart.Fill();
  std::vector<Derivation> roots = chart.Roots();
  if (roots.empty()) {
    throw Error(ErrorCode::kNoParse, "no full parse for '" + JoinTokens(tokens) + "'");
  }
  return roots;
}

std::vector<double> DerivationProbabilities(const std::vector<Derivation>& derivations,
                                            const Lexicon& lexicon) {
  if (derivations.empty()) return {};
  std::vector<double> scores;
  scores.reserve(derivations.size());
  for (const auto& d : derivations) scores.push_back(Score(d.features, lexicon));
  double log_z = LogSumExp(scores);
  for (double& s : scores) s = std::exp(s - log_z);
  return scores;
}

std::vector<LogicalFormClass> RankLogicalForms(std::vector<Derivation> derivations,
                                               const Lexicon& lexicon) {
  std::vector<double> probs = DerivationProbabilities(derivations, lexicon);
  std::map<std::string, std::size_t> index;
  std::vector<LogicalFormClass> classes;
  for (std::size_t i = 0; i < derivations.size(); ++i) {
    std::string key = AlphaKey(derivations[i].sign.semantics);
    auto [it, inserted] = index.emplace(key, classes.size());
    if (inserted) {
      classes.push_back(LogicalFormClass{Canonicalize(derivations[i].sign.semantics), 0.0, {}});
    }
    LogicalFormClass& c = classes[it->second];
    c.probability += probs[i];
    c.derivations.push_back(std::move(derivations[i]));
  }
  std::vector<std::string> rendered;
  for (const auto& c : classes) rendered.push_back(ToString(c.logical_form));
  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    double pa = classes[a].probability, pb = classes[b].probability;
    if (std::abs(pa - pb) > 1e-12) return pa > pb;
    return rendered[a] < rendered[b];
  });
  std::vector<LogicalFormClass> sorted;
  sorted.reserve(classes.size());
  for (std::size_t i : order) sorted.push_back(std::move(classes[i]));
  return sorted;
}

double ParseProbability(const Term& lf, const std::vector<std::string>& tokens,
                        const Lexicon& lexicon, const ParseOptions& options) {
  std::vector<Derivation> derivations = ParseAll(tokens, lexicon, options);
  std::vector<double> probs = DerivationProbabilities(derivations, lexicon);
  std::string key = AlphaKey(lf);
  double p = 0.0;
  for (std::size_t i = 0; i < derivations.size(); ++i) {
    if (AlphaKey(derivations[i].sign.semantics) == key) p += probs[i];
  }
  return p;
}

ParseResult ArgmaxParse(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                        const ParseOptions& options) {
  auto classes = RankLogicalForms(ParseAll(tokens, lexicon, options), lexicon);
  LogicalFormClass& best = classes.front();
  return ParseResult{best.logical_form, best.probability, std::move(best.derivations)};
}

std::string RenderDerivation(const Derivation& d, const Lexicon& lexicon) {
  std::ostringstream out;
  RenderInto(d, lexicon, 0, out);
  return out.str();
}

bool VerifyDerivation(const Derivation& d, const Lexicon& lexicon) {
  std::optional<Sign> expect;
  switch (d.rule) {
    case Derivation::Rule::kLexical: {
      const LexEntry& e = lexicon.entry(d.entry);
      if (d.end != d.begin + 1) return false;
      expect = Sign{e.category, e.semantics};
      break;
    }
    case Derivation::Rule::kUnary:
      if (d.children.size() != 1 || !VerifyDerivation(*d.children[0], lexicon)) return false;
      expect = UnaryProject(d.children[0]->sign);
      break;
    default:
      if (d.children.size() != 2) return false;
      if (!VerifyDerivation(*d.children[0], lexicon) ||
          !VerifyDerivation(*d.children[1], lexicon)) {
        return false;
      }
      if (d.children[0]->end != d.children[1]->begin || d.children[0]->begin != d.begin ||
          d.children[1]->end != d.end) {
        return false;
      }
      expect = Combine(d.children[0]->sign, d.children[1]->sign);
      break;
  }
  return expect && expect->category == d.sign.category &&
         AlphaEqual(expect->semantics, d.sign.semantics);
}

}  // namespace actccg
