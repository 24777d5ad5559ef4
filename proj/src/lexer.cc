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

#include "lexer.h"

#include <algorithm>

namespace casemod::internal {

void fail(ParseErrorKind kind, std::size_t line, std::size_t column,
          const std::string& message) {
  throw ParseError(kind, line, column, message);
}

std::vector<Line> lex_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      const unsigned char ch = static_cast<unsigned char>(raw[i]);
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
        continue;
      }
      if (ch < 0x20 || ch == 0x7f) {
        fail(ParseErrorKind::kSyntax, number, i + 1, "control byte in input");
      }
      const std::size_t start = i;
      while (i < raw.size()) {
        const unsigned char c = static_cast<unsigned char>(raw[i]);
        if (c == ' ' || c == '\t' || c == '\r') break;
        if (c < 0x20 || c == 0x7f) {
          fail(ParseErrorKind::kSyntax, number, i + 1, "control byte in input");
        }
        ++i;
      }
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
    ++number;
  }
  return lines;
}

std::size_t count_lines(std::string_view text) {
  std::size_t n = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  if (!text.empty() && text.back() != '\n') ++n;
  return n;
}

bool is_integer(std::string_view text) {
  if (!text.empty() && text[0] == '-') text.remove_prefix(1);
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace casemod::internal
