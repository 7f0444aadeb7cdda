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

#include "actccg/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "actccg/error.hpp"

namespace actccg {

Term Term::Make(TermKind kind, std::string name, std::vector<Term> children) {
  return Term(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(children)}));
}

Term Term::Var(std::string name) { return Make(TermKind::kVar, std::move(name), {}); }
Term Term::Const(std::string name) {
  return Make(TermKind::kConst, std::move(name), {});
}
Term Term::Pred(std::string name, std::vector<Term> args) {
  return Make(TermKind::kPred, std::move(name), std::move(args));
}
Term Term::Lam(std::string param, Term body) {
  return Make(TermKind::kLam, std::move(param), {std::move(body)});
}
Term Term::App(Term fun, Term arg) {
  return Make(TermKind::kApp, {}, {std::move(fun), std::move(arg)});
}
Term Term::And(Term l, Term r) {
  return Make(TermKind::kAnd, {}, {std::move(l), std::move(r)});
}
Term Term::Or(Term l, Term r) {
  return Make(TermKind::kOr, {}, {std::move(l), std::move(r)});
}
Term Term::Not(Term t) { return Make(TermKind::kNot, {}, {std::move(t)}); }
Term Term::Implies(Term l, Term r) {
  return Make(TermKind::kImplies, {}, {std::move(l), std::move(r)});
}
Term Term::Forall(std::string var, Term body) {
  return Make(TermKind::kForall, std::move(var), {std::move(body)});
}
Term Term::Exists(std::string var, Term body) {
  return Make(TermKind::kExists, std::move(var), {std::move(body)});
}

bool Term::IsBinder() const {
  return kind() == TermKind::kLam || kind() == TermKind::kForall ||
         kind() == TermKind::kExists;
}

bool Term::SameAs(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name() ||
      children().size() != other.children().size()) {
    return false;
  }
  for (std::size_t i = 0; i < children().size(); ++i) {
    if (!child(i).SameAs(other.child(i))) return false;
  }
  return true;
}

std::size_t Term::Size() const {
  std::size_t n = 1;
  for (const Term& c : children()) n += c.Size();
  return n;
}

namespace {

// Rebuilds a node of the same shape with new children.
Term Rebuild(const Term& t, std::vector<Term> children) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
      return t;
    case TermKind::kPred:
      return Term::Pred(t.name(), std::move(children));
    case TermKind::kLam:
      return Term::Lam(t.name(), std::move(children[0]));
    case TermKind::kForall:
      return Term::Forall(t.name(), std::move(children[0]));
    case TermKind::kExists:
      return Term::Exists(t.name(), std::move(children[0]));
    case TermKind::kApp:
      return Term::App(std::move(children[0]), std::move(children[1]));
    case TermKind::kAnd:
      return Term::And(std::move(children[0]), std::move(children[1]));
    case TermKind::kOr:
      return Term::Or(std::move(children[0]), std::move(children[1]));
    case TermKind::kNot:
      return Term::Not(std::move(children[0]));
    case TermKind::kImplies:
      return Term::Implies(std::move(children[0]), std::move(children[1]));
  }
  return t;
}

Term RebindAs(const Term& binder, std::string name, Term body) {
  switch (binder.kind()) {
    case TermKind::kForall:
      return Term::Forall(std::move(name), std::move(body));
    case TermKind::kExists:
      return Term::Exists(std::move(name), std::move(body));
    default:
      return Term::Lam(std::move(name), std::move(body));
  }
}

void FreeVarsInto(const Term& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  if (t.kind() == TermKind::kVar) {
    if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) {
      out.insert(t.name());
    }
    return;
  }
  if (t.IsBinder()) {
    bound.push_back(t.name());
    FreeVarsInto(t.body(), bound, out);
    bound.pop_back();
    return;
  }
  for (const Term& c : t.children()) FreeVarsInto(c, bound, out);
}

bool OccursFree(const Term& t, std::string_view var) {
  if (t.kind() == TermKind::kVar) return t.name() == var;
  if (t.IsBinder() && t.name() == var) return false;
  for (const Term& c : t.children()) {
    if (OccursFree(c, var)) return true;
  }
  return false;
}

Term SubstituteImpl(const Term& t, std::string_view var, const Term& repl,
                    const std::set<std::string>& repl_free) {
  switch (t.kind()) {
    case TermKind::kVar:
      return t.name() == var ? repl : t;
    case TermKind::kConst:
      return t;
    case TermKind::kLam:
    case TermKind::kForall:
    case TermKind::kExists: {
      if (t.name() == var || !OccursFree(t.body(), var)) return t;
      if (repl_free.count(t.name()) == 0) {
        return RebindAs(t, t.name(),
                        SubstituteImpl(t.body(), var, repl, repl_free));
      }
      std::set<std::string> avoid = repl_free;
      std::vector<std::string> none;
      FreeVarsInto(t.body(), none, avoid);
      avoid.insert(std::string(var));
      std::string fresh = FreshName(t.name(), avoid);
      Term renamed = SubstituteImpl(t.body(), t.name(), Term::Var(fresh), {fresh});
      return RebindAs(t, fresh, SubstituteImpl(renamed, var, repl, repl_free));
    }
    default: {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      bool changed = false;
      for (const Term& c : t.children()) {
        kids.push_back(SubstituteImpl(c, var, repl, repl_free));
        changed = changed || !kids.back().SameAs(c);
      }
      return changed ? Rebuild(t, std::move(kids)) : t;
    }
  }
}

class Reducer {
 public:
  explicit Reducer(std::size_t budget) : budget_(budget) {}

  Term Normalize(Term t) {
    t = WeakHead(std::move(t));
    if (t.kind() == TermKind::kVar || t.kind() == TermKind::kConst) return t;
    std::vector<Term> kids;
    kids.reserve(t.children().size());
    for (const Term& c : t.children()) kids.push_back(Normalize(c));
    return Rebuild(t, std::move(kids));
  }

 private:
  void Tick() {
    if (++steps_ > budget_) {
      throw Error(ErrorCode::kNonTermination,
                  "beta reduction exceeded step budget of " +
                      std::to_string(budget_));
    }
  }

  // Contracts head redexes until the head is stuck.
  Term WeakHead(Term t) {
    while (t.kind() == TermKind::kApp) {
      Term f = WeakHead(t.fun());
      if (f.kind() == TermKind::kLam) {
        Tick();
        t = Substitute(f.body(), f.name(), t.arg());
      } else if (f.kind() == TermKind::kConst) {
        Tick();
        return Term::Pred(f.name(), {t.arg()});
      } else if (f.kind() == TermKind::kPred) {
        Tick();
        std::vector<Term> args(f.children().begin(), f.children().end());
        args.push_back(t.arg());
        return Term::Pred(f.name(), std::move(args));
      } else {
        return Term::App(std::move(f), t.arg());
      }
    }
    return t;
  }

  std::size_t budget_;
  std::size_t steps_ = 0;
};

bool AlphaEqualImpl(const Term& a, const Term& b, std::vector<std::string>& ea,
                    std::vector<std::string>& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::kVar: {
      auto depth = [](const std::vector<std::string>& env, const std::string& n) {
        for (std::size_t i = env.size(); i-- > 0;) {
          if (env[i] == n) return static_cast<long>(env.size() - 1 - i);
        }
        return -1L;
      };
      long da = depth(ea, a.name());
      long db = depth(eb, b.name());
      if (da != db) return false;
      return da >= 0 || a.name() == b.name();
    }
    case TermKind::kConst:
      return a.name() == b.name();
    case TermKind::kLam:
    case TermKind::kForall:
    case TermKind::kExists: {
      ea.push_back(a.name());
      eb.push_back(b.name());
      bool eq = AlphaEqualImpl(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return eq;
    }
    default:
      if (a.name() != b.name() || a.children().size() != b.children().size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.children().size(); ++i) {
        if (!AlphaEqualImpl(a.child(i), b.child(i), ea, eb)) return false;
      }
      return true;
  }
}

void AlphaKeyImpl(const Term& t, std::vector<std::string>& env, std::string& out) {
  switch (t.kind()) {
    case TermKind::kVar: {
      for (std::size_t i = env.size(); i-- > 0;) {
        if (env[i] == t.name()) {
          out += '#';
          out += std::to_string(env.size() - 1 - i);
          return;
        }
      }
      out += '$';
      out += t.name();
      return;
    }
    case TermKind::kConst:
      out += "c:";
      out += t.name();
      return;
    case TermKind::kLam:
    case TermKind::kForall:
    case TermKind::kExists:
      out += t.kind() == TermKind::kLam ? "L." : t.kind() == TermKind::kForall ? "A." : "E.";
      env.push_back(t.name());
      AlphaKeyImpl(t.body(), env, out);
      env.pop_back();
      return;
    default:
      break;
  }
  switch (t.kind()) {
    case TermKind::kPred: out += "p:" + t.name(); break;
    case TermKind::kApp: out += "@"; break;
    case TermKind::kAnd: out += "&"; break;
    case TermKind::kOr: out += "|"; break;
    case TermKind::kNot: out += "!"; break;
    case TermKind::kImplies: out += ">"; break;
    default: break;
  }
  out += '(';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ',';
    AlphaKeyImpl(t.child(i), env, out);
  }
  out += ')';
}

void CollectNames(const Term& t, std::set<std::string>& vars,
                  std::set<std::string>& consts) {
  if (t.kind() == TermKind::kVar || t.IsBinder()) vars.insert(t.name());
  if (t.kind() == TermKind::kConst) consts.insert(t.name());
  for (const Term& c : t.children()) CollectNames(c, vars, consts);
}

class Canonicalizer {
 public:
  explicit Canonicalizer(std::set<std::string> reserved)
      : reserved_(std::move(reserved)) {}

  Term Run(const Term& t) {
    switch (t.kind()) {
      case TermKind::kVar: {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == t.name()) return Term::Var(it->second);
        }
        return t;
      }
      case TermKind::kConst:
        return t;
      case TermKind::kLam:
      case TermKind::kForall:
      case TermKind::kExists: {
        std::string fresh = NextName();
        env_.emplace_back(t.name(), fresh);
        Term body = Run(t.body());
        env_.pop_back();
        return RebindAs(t, fresh, std::move(body));
      }
      default: {
        std::vector<Term> kids;
        for (const Term& c : t.children()) kids.push_back(Run(c));
        return Rebuild(t, std::move(kids));
      }
    }
  }

 private:
  std::string NextName() {
    static const char* const kBase[] = {"x", "y", "z", "w"};
    for (;;) {
      std::string n = counter_ < 4 ? std::string(kBase[counter_])
                                   : "v" + std::to_string(counter_);
      ++counter_;
      if (reserved_.count(n) == 0) return n;
    }
  }

  std::set<std::string> reserved_;
  std::vector<std::pair<std::string, std::string>> env_;
  std::size_t counter_ = 0;
};

Term ReplaceAlpha(const Term& t, const Term& arg,
                  const std::set<std::string>& arg_free,
                  std::vector<std::string>& bound, const Term& v, bool& hit) {
  bool shadowed = std::any_of(bound.begin(), bound.end(), [&](const std::string& b) {
    return arg_free.count(b) != 0;
  });
  if (!shadowed && AlphaEqual(t, arg)) {
    hit = true;
    return v;
  }
  if (t.kind() == TermKind::kVar || t.kind() == TermKind::kConst) return t;
  if (t.IsBinder()) bound.push_back(t.name());
  std::vector<Term> kids;
  for (const Term& c : t.children()) {
    kids.push_back(ReplaceAlpha(c, arg, arg_free, bound, v, hit));
  }
  if (t.IsBinder()) bound.pop_back();
  return Rebuild(t, std::move(kids));
}

}  // namespace

std::set<std::string> FreeVars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  FreeVarsInto(t, bound, out);
  return out;
}

std::set<std::string> AllVarNames(const Term& t) {
  std::set<std::string> vars, consts;
  CollectNames(t, vars, consts);
  return vars;
}

std::string FreshName(std::string_view base, const std::set<std::string>& avoid) {
  std::string stem(base);
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  if (avoid.count(stem) == 0) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (avoid.count(candidate) == 0) return candidate;
  }
}

Term Substitute(const Term& t, std::string_view var, const Term& replacement) {
  return SubstituteImpl(t, var, replacement, FreeVars(replacement));
}

Term BetaReduce(const Term& t, std::size_t step_budget) {
  return Reducer(step_budget).Normalize(t);
}

bool IsBetaNormal(const Term& t) {
  if (t.kind() == TermKind::kApp) {
    TermKind head = t.fun().kind();
    if (head == TermKind::kLam || head == TermKind::kConst ||
        head == TermKind::kPred) {
      return false;
    }
  }
  for (const Term& c : t.children()) {
    if (!IsBetaNormal(c)) return false;
  }
  return true;
}

bool AlphaEqual(const Term& a, const Term& b) {
  std::vector<std::string> ea, eb;
  return AlphaEqualImpl(a, b, ea, eb);
}

std::string AlphaKey(const Term& t) {
  std::string out;
  std::vector<std::string> env;
  AlphaKeyImpl(t, env, out);
  return out;
}

Term Canonicalize(const Term& t) {
  std::set<std::string> reserved = FreeVars(t);
  std::set<std::string> vars, consts;
  CollectNames(t, vars, consts);
  reserved.insert(consts.begin(), consts.end());
  return Canonicalizer(std::move(reserved)).Run(t);
}

Term FlattenImplications(const Term& t) {
  if (t.kind() == TermKind::kVar || t.kind() == TermKind::kConst) return t;
  std::vector<Term> kids;
  for (const Term& c : t.children()) kids.push_back(FlattenImplications(c));
  Term out = Rebuild(t, std::move(kids));
  if (out.kind() == TermKind::kImplies && out.right().kind() == TermKind::kImplies) {
    const Term& inner = out.right();
    return Term::Implies(Term::And(out.left(), inner.left()), inner.right());
  }
  return out;
}

InverseResult InverseLambda(const Term& result, const Term& arg,
                            std::string_view param) {
  std::set<std::string> avoid = AllVarNames(result);
  std::set<std::string> arg_free = FreeVars(arg);
  avoid.insert(arg_free.begin(), arg_free.end());
  std::string v = FreshName(param, avoid);
  std::vector<std::string> bound;
  bool hit = false;
  Term body = ReplaceAlpha(result, arg, arg_free, bound, Term::Var(v), hit);
  return InverseResult{Term::Lam(v, std::move(body)), !hit};
}

std::size_t LeadingLambdas(const Term& t) {
  std::size_t n = 0;
  const Term* cur = &t;
  while (cur->kind() == TermKind::kLam) {
    ++n;
    cur = &cur->body();
  }
  return n;
}

void CollectPredicateArities(
    const Term& t, std::vector<std::pair<std::string, std::size_t>>& out) {
  if (t.kind() == TermKind::kPred) out.emplace_back(t.name(), t.children().size());
  for (const Term& c : t.children()) CollectPredicateArities(c, out);
}

}  // namespace actccg
