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

#include "casemod/error.h"

namespace casemod {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kSyntax: return "syntax error";
    case ParseErrorKind::kUnknownIdentifier: return "unknown identifier";
    case ParseErrorKind::kOutOfRange: return "value out of range";
    case ParseErrorKind::kDuplicateName: return "duplicate name";
    case ParseErrorKind::kMissingSection: return "missing section";
    case ParseErrorKind::kArity: return "arity error";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       std::size_t column, const std::string& message)
    : Error(std::string(to_string(kind)) + " at line " + std::to_string(line) +
            ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace casemod
