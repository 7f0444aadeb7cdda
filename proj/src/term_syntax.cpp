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

// ASCII surface syntax for terms.
//
//   expr    := implies
//   implies := disj [ '->' implies ]
//   disj    := conj { '|' conj }
//   conj    := unary { '&' unary }
//   unary   := '!' unary | '\' id '.' expr | forall id '.' expr
//            | exists id '.' expr | atom { atom }
//   atom    := '(' expr ')' | id [ '(' expr { ',' expr } ')' ]

#include <algorithm>
#include <cctype>
#include <vector>

#include "actccg/error.hpp"
#include "actccg/term.hpp"

namespace actccg {
namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool LooksLikeVariable(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term ParseAll() {
    Term t = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) {
    throw SyntaxError(what, pos_);
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(std::string_view lit) {
    SkipSpace();
    return text_.substr(pos_, lit.size()) == lit;
  }

  bool Accept(std::string_view lit) {
    if (!Peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void Expect(std::string_view lit) {
    if (!Accept(lit)) Fail("expected '" + std::string(lit) + "'");
  }

  bool PeekIdent() {
    SkipSpace();
    return pos_ < text_.size() && IsIdentStart(text_[pos_]);
  }

  // Keyword followed by a non-identifier character.
  bool AcceptKeyword(std::string_view kw) {
    SkipSpace();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t end = pos_ + kw.size();
    if (end < text_.size() && IsIdentChar(text_[end])) return false;
    pos_ = end;
    return true;
  }

  std::string Ident() {
    SkipSpace();
    if (pos_ >= text_.size() || !IsIdentStart(text_[pos_])) Fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    if (id == "forall" || id == "exists") {
      pos_ = start;
      Fail("keyword '" + id + "' used as identifier");
    }
    return id;
  }

  bool IsBound(const std::string& name) const {
    return std::find(scope_.begin(), scope_.end(), name) != scope_.end();
  }

  Term ParseExpr() { return ParseImplies(); }

  Term ParseImplies() {
    Term lhs = ParseDisj();
    if (Accept("->")) return Term::Implies(std::move(lhs), ParseImplies());
    return lhs;
  }

  Term ParseDisj() {
    Term lhs = ParseConj();
    while (Accept("|")) lhs = Term::Or(std::move(lhs), ParseConj());
    return lhs;
  }

  Term ParseConj() {
    Term lhs = ParseUnary();
    while (Accept("&")) lhs = Term::And(std::move(lhs), ParseUnary());
    return lhs;
  }

  Term ParseBinder(TermKind kind) {
    std::string var = Ident();
    Expect(".");
    scope_.push_back(var);
    Term body = ParseExpr();
    scope_.pop_back();
    switch (kind) {
      case TermKind::kForall: return Term::Forall(var, std::move(body));
      case TermKind::kExists: return Term::Exists(var, std::move(body));
      default: return Term::Lam(var, std::move(body));
    }
  }

  Term ParseUnary() {
    if (Accept("!")) return Term::Not(ParseUnary());
    if (Accept("\\")) return ParseBinder(TermKind::kLam);
    if (AcceptKeyword("forall")) return ParseBinder(TermKind::kForall);
    if (AcceptKeyword("exists")) return ParseBinder(TermKind::kExists);
    Term head = ParseAtom();
    while (Peek("(") || PeekAtomIdent()) head = Term::App(std::move(head), ParseAtom());
    return head;
  }

  bool PeekAtomIdent() {
    if (!PeekIdent()) return false;
    std::size_t save = pos_;
    bool keyword = AcceptKeyword("forall") || AcceptKeyword("exists");
    pos_ = save;
    return !keyword;
  }

  Term ParseAtom() {
    if (Accept("(")) {
      Term inner = ParseExpr();
      Expect(")");
      return inner;
    }
    std::string name = Ident();
    bool bound = IsBound(name);
    if (Accept("(")) {
      std::vector<Term> args;
      args.push_back(ParseExpr());
      while (Accept(",")) args.push_back(ParseExpr());
      Expect(")");
      if (bound) {
        Term t = Term::Var(name);
        for (Term& a : args) t = Term::App(std::move(t), std::move(a));
        return t;
      }
      return Term::Pred(name, std::move(args));
    }
    if (bound || LooksLikeVariable(name)) return Term::Var(name);
    return Term::Const(name);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

// Binding strength used to decide parenthesization.
int Precedence(const Term& t) {
  switch (t.kind()) {
    case TermKind::kLam:
    case TermKind::kForall:
    case TermKind::kExists:
      return 0;
    case TermKind::kImplies:
      return 1;
    case TermKind::kOr:
      return 2;
    case TermKind::kAnd:
      return 3;
    case TermKind::kNot:
      return 4;
    default:
      return 5;
  }
}

class Printer {
 public:
  std::string Print(const Term& t) {
    std::string out;
    Emit(t, out);
    return out;
  }

 private:
  bool IsBound(const std::string& name) const {
    return std::find(scope_.begin(), scope_.end(), name) != scope_.end();
  }

  // Atomic: safe as a juxtaposition argument without parentheses.
  bool IsAtomic(const Term& t) const {
    switch (t.kind()) {
      case TermKind::kVar:
      case TermKind::kConst:
      case TermKind::kPred:
        return true;
      case TermKind::kApp: {
        const Term* head = &t;
        while (head->kind() == TermKind::kApp) head = &head->fun();
        return head->kind() == TermKind::kVar && IsBound(head->name());
      }
      default:
        return false;
    }
  }

  void Wrapped(const Term& t, bool paren, std::string& out) {
    if (paren) out += '(';
    Emit(t, out);
    if (paren) out += ')';
  }

  void Emit(const Term& t, std::string& out) {
    switch (t.kind()) {
      case TermKind::kVar:
      case TermKind::kConst:
        out += t.name();
        return;
      case TermKind::kPred:
        out += t.name();
        out += '(';
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          if (i) out += ',';
          Emit(t.child(i), out);
        }
        out += ')';
        return;
      case TermKind::kApp: {
        std::vector<const Term*> args;
        const Term* head = &t;
        while (head->kind() == TermKind::kApp) {
          args.push_back(&head->arg());
          head = &head->fun();
        }
        std::reverse(args.begin(), args.end());
        if (head->kind() == TermKind::kVar && IsBound(head->name())) {
          out += head->name();
          out += '(';
          for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out += ',';
            Emit(*args[i], out);
          }
          out += ')';
          return;
        }
        Wrapped(*head, true, out);
        for (const Term* a : args) {
          out += ' ';
          Wrapped(*a, !IsAtomic(*a), out);
        }
        return;
      }
      case TermKind::kNot:
        out += '!';
        Wrapped(t.body(), Precedence(t.body()) < 4, out);
        return;
      case TermKind::kAnd:
        Wrapped(t.left(), Precedence(t.left()) < 3, out);
        out += " & ";
        Wrapped(t.right(), Precedence(t.right()) <= 3, out);
        return;
      case TermKind::kOr:
        Wrapped(t.left(), Precedence(t.left()) < 2, out);
        out += " | ";
        Wrapped(t.right(), Precedence(t.right()) <= 2, out);
        return;
      case TermKind::kImplies:
        Wrapped(t.left(), Precedence(t.left()) <= 1, out);
        out += " -> ";
        Wrapped(t.right(), Precedence(t.right()) < 1, out);
        return;
      case TermKind::kLam:
      case TermKind::kForall:
      case TermKind::kExists: {
        if (t.kind() == TermKind::kLam) {
          out += '\\';
        } else {
          out += t.kind() == TermKind::kForall ? "forall " : "exists ";
        }
        out += t.name();
        out += '.';
        if (!(t.kind() == TermKind::kLam && t.body().kind() == TermKind::kLam)) out += ' ';
        scope_.push_back(t.name());
        Emit(t.body(), out);
        scope_.pop_back();
        return;
      }
    }
  }

  std::vector<std::string> scope_;
};

}  // namespace

Term ParseTerm(std::string_view text) { return TermParser(text).ParseAll(); }

std::string ToString(const Term& t) { return Printer().Print(t); }

}  // namespace actccg
