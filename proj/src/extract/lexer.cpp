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

#include "scg/extract/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace scg::extract {
namespace {

constexpr std::array<std::string_view, 51> kReserved = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",
    "catch",    "char",       "class",     "const",     "continue", "default",
    "do",       "double",     "else",      "enum",      "extends",  "final",
    "finally",  "float",      "for",       "goto",      "if",       "implements",
    "import",   "instanceof", "int",       "interface", "long",     "native",
    "new",      "package",    "private",   "protected", "public",   "return",
    "short",    "static",     "strictfp",  "super",     "switch",   "synchronized",
    "this",     "throw",      "throws",    "transient", "try",      "void",
    "volatile", "while",      "_",
};

// Longest first. '>' never appears at the start of an entry.
constexpr std::array<std::string_view, 24> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "+=",
    "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "<<", "@",  "?",  ":",  ";",
};

bool ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      lex_one();
    }
    Token end;
    end.kind = TokenKind::End;
    end.line = end.end_line = line_;
    end.column = end.end_column = col_;
    out_.push_back(end);
    pair_brackets();
    return std::move(out_);
  }

 private:
  char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 0;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        int l = line_, k = col_;
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (pos_ >= src_.size()) throw LexError("unterminated comment", l, k);
          advance();
        }
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  void emit(TokenKind kind, std::size_t start, int line, int col) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.line = line;
    t.column = col;
    t.end_line = line_;
    t.end_column = col_;
    out_.push_back(std::move(t));
  }

  void lex_quoted(char quote, TokenKind kind, std::size_t start, int line, int col) {
    if (quote == '"' && peek(1) == '"' && peek(2) == '"') {
      for (int i = 0; i < 3; ++i) advance();
      while (!(peek() == '"' && peek(1) == '"' && peek(2) == '"')) {
        if (pos_ >= src_.size()) throw LexError("unterminated text block", line, col);
        if (peek() == '\\') advance();
        if (pos_ < src_.size()) advance();
      }
      for (int i = 0; i < 3; ++i) advance();
      emit(kind, start, line, col);
      return;
    }
    advance();
    while (peek() != quote) {
      if (pos_ >= src_.size() || peek() == '\n') throw LexError("unterminated literal", line, col);
      if (peek() == '\\') advance();
      if (pos_ >= src_.size()) throw LexError("unterminated literal", line, col);
      advance();
    }
    advance();
    emit(kind, start, line, col);
  }

  void lex_number(std::size_t start, int line, int col) {
    bool is_float = false;
    bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
    while (pos_ < src_.size()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        bool exponent = hex ? (c == 'p' || c == 'P') : (c == 'e' || c == 'E');
        advance();
        if (exponent) {
          is_float = true;
          if (peek() == '+' || peek() == '-') advance();
        }
      } else if (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        is_float = true;
        advance();
      } else if (c == '.' && !is_float && !ident_start(static_cast<unsigned char>(peek(1)))) {
        is_float = true;  // "1." is a double literal
        advance();
      } else {
        break;
      }
    }
    if (!hex) {
      char last = src_[pos_ - 1];
      if (last == 'f' || last == 'F' || last == 'd' || last == 'D') is_float = true;
    }
    emit(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start, line, col);
  }

  void lex_one() {
    std::size_t start = pos_;
    int line = line_, col = col_;
    unsigned char c = static_cast<unsigned char>(peek());
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(peek()))) advance();
      emit(TokenKind::Identifier, start, line, col);
      return;
    }
    if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      lex_number(start, line, col);
      return;
    }
    if (c == '"') return lex_quoted('"', TokenKind::StringLiteral, start, line, col);
    if (c == '\'') return lex_quoted('\'', TokenKind::CharLiteral, start, line, col);
    if (c == '>') {
      advance();
      emit(TokenKind::Operator, start, line, col);
      out_.back().joined_next = peek() == '>' || peek() == '=';
      return;
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        emit(TokenKind::Operator, start, line, col);
        return;
      }
    }
    advance();
    emit(TokenKind::Operator, start, line, col);
  }

  void pair_brackets() {
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < out_.size(); ++i) {
      const Token& t = out_[i];
      if (t.kind != TokenKind::Operator || t.text.size() != 1) continue;
      char c = t.text[0];
      if (c == '(' || c == '[' || c == '{') {
        stack.push_back(i);
      } else if (c == ')' || c == ']' || c == '}') {
        char open = c == ')' ? '(' : c == ']' ? '[' : '{';
        if (stack.empty() || out_[stack.back()].text[0] != open) {
          throw LexError(std::string("unbalanced '") + c + "'", t.line, t.column);
        }
        out_[i].partner = stack.back();
        out_[stack.back()].partner = i;
        stack.pop_back();
      }
    }
    if (!stack.empty()) {
      const Token& t = out_[stack.back()];
      throw LexError("unclosed '" + t.text + "'", t.line, t.column);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 0;
  int col_ = 0;
  std::vector<Token> out_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

bool is_reserved_word(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

}  // namespace scg::extract
