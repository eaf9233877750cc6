// Copyright 2026 The scg Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scg::extract {

enum class TokenKind { Identifier, IntLiteral, FloatLiteral, CharLiteral, StringLiteral, Operator, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;  // exclusive
  // '>' is always lexed alone so generic closers never fuse; this flag tells
  // the expression parser the next character follows without a gap.
  bool joined_next = false;
  // For '(' '[' '{' and their closers: index of the partner token.
  std::size_t partner = static_cast<std::size_t>(-1);
};

// Thrown for input no recovery can cope with: unterminated comments or
// literals, unbalanced brackets.
class LexError : public std::runtime_error {
 public:
  LexError(const std::string& message, int line, int column)
      : std::runtime_error(message), line(line), column(column) {}
  int line;
  int column;
};

// Tokenizes Java source and pairs up brackets. The result always ends with an
// End token.
std::vector<Token> tokenize(std::string_view source);

bool is_reserved_word(std::string_view word);

}  // namespace scg::extract
