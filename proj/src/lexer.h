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

// Shared tokenizer for the line-oriented text formats.

#ifndef CASEMOD_SRC_LEXER_H_
#define CASEMOD_SRC_LEXER_H_

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "casemod/error.h"

namespace casemod::internal {

struct Token {
  std::string text;
  std::size_t column = 1;
};

struct Line {
  std::size_t number = 1;
  std::vector<Token> tokens;

  std::size_t end_column() const {
    return tokens.empty() ? 1
                          : tokens.back().column + tokens.back().text.size();
  }
};

/// Splits `text` into non-empty lines of whitespace-separated tokens with
/// `#` comments removed. Control bytes other than tab and CR are a syntax
/// error.
std::vector<Line> lex_lines(std::string_view text);

/// Number of lines in `text`, counting a final unterminated one.
std::size_t count_lines(std::string_view text);

[[noreturn]] void fail(ParseErrorKind kind, std::size_t line,
                       std::size_t column, const std::string& message);

/// Parses a whole token as an unsigned integer. Non-digits are a syntax
/// error, overflow is out of range.
template <typename T>
T parse_unsigned(const Token& token, std::size_t line) {
  T value{};
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  if (token.text.empty() || token.text[0] < '0' || token.text[0] > '9') {
    fail(ParseErrorKind::kSyntax, line, token.column,
         "expected a non-negative integer, got '" + token.text + "'");
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    fail(ParseErrorKind::kOutOfRange, line, token.column,
         "integer '" + token.text + "' is too large");
  }
  if (ec != std::errc() || ptr != last) {
    fail(ParseErrorKind::kSyntax, line, token.column,
         "expected a non-negative integer, got '" + token.text + "'");
  }
  return value;
}

/// True if `text` looks like a (possibly negative) decimal integer.
bool is_integer(std::string_view text);

}  // namespace casemod::internal

#endif  // CASEMOD_SRC_LEXER_H_
