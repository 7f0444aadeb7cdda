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

#ifndef ACTCCG_ERROR_HPP_
#define ACTCCG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace actccg {

// Numeric values are part of the C ABI (see actccg.h); append only.
enum class ErrorCode {
  kSyntax = 1,
  kNoParse = 2,
  kUnknownToken = 3,
  kNonTermination = 4,
  kInductionFailure = 5,
  kDegenerateCorpus = 6,
  kMalformedEvent = 7,
  kBudgetExceeded = 8,
  kRangeRestriction = 9,
  kInvalidEntry = 10,
  kArityMismatch = 11,
  kIo = 12,
  kInvalidArgument = 13,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed text. `position` is a byte offset for single-expression parsers
// and a 1-based line number for file loaders; `is_line` tells which.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position,
              bool is_line = false);
  std::size_t position() const { return position_; }
  bool is_line() const { return is_line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
  bool is_line_;
};

class UnknownTokenError : public Error {
 public:
  explicit UnknownTokenError(std::vector<std::string> tokens);
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
};

// Non-fatal finding reported by loaders and the trainer.
struct Diagnostic {
  std::size_t line = 0;  // 0 when not tied to a file line
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

std::string ToString(const Diagnostic& d);

}  // namespace actccg

#endif  // ACTCCG_ERROR_HPP_
