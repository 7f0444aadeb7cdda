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

#include "actccg/error.hpp"

namespace actccg {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kNoParse: return "NoParse";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kNonTermination: return "NonTermination";
    case ErrorCode::kInductionFailure: return "InductionFailure";
    case ErrorCode::kDegenerateCorpus: return "DegenerateCorpus";
    case ErrorCode::kMalformedEvent: return "MalformedEvent";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kRangeRestriction: return "RangeRestrictionError";
    case ErrorCode::kInvalidEntry: return "InvalidEntry";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

std::string SyntaxMessage(const std::string& detail, std::size_t position,
                          bool is_line) {
  return (is_line ? "line " : "offset ") + std::to_string(position) + ": " + detail;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out = "no lexical entry for:";
  for (const auto& t : tokens) out += " " + t;
  return out;
}

}  // namespace

SyntaxError::SyntaxError(const std::string& message, std::size_t position,
                         bool is_line)
    : Error(ErrorCode::kSyntax, SyntaxMessage(message, position, is_line)),
      detail_(message),
      position_(position),
      is_line_(is_line) {}

UnknownTokenError::UnknownTokenError(std::vector<std::string> tokens)
    : Error(ErrorCode::kUnknownToken, JoinTokens(tokens)), tokens_(std::move(tokens)) {}

std::string ToString(const Diagnostic& d) {
  if (d.line == 0) return d.message;
  return "line " + std::to_string(d.line) + ": " + d.message;
}

}  // namespace actccg
