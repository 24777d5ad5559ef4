// Copyright 2026 The casemod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CASEMOD_ERROR_H_
#define CASEMOD_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casemod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates an operation's precondition (bad id, wrong flavor,
/// malformed instance, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured work limit. Solvers raise this instead
/// of returning an answer they could not establish.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  kSyntax,
  kUnknownIdentifier,
  kOutOfRange,
  kDuplicateName,
  kMissingSection,
  kArity,
};

const char* to_string(ParseErrorKind kind);

/// Error in a text document. `line` and `column` are 1-based.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace casemod

#endif  // CASEMOD_ERROR_H_
