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

#include "scg/extract/parser.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "scg/extract/lexer.hpp"

namespace scg::extract {
namespace {

struct SyntaxError {
  std::string message;
  std::size_t token;
};

constexpr std::array<std::string_view, 9> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void"};

constexpr std::array<std::string_view, 13> kModifierWords = {
    "public",    "protected", "private",  "static",       "final",
    "abstract",  "native",    "transient", "synchronized", "volatile",
    "strictfp",  "default",   "sealed"};

bool is_primitive(std::string_view s) {
  return std::find(kPrimitives.begin(), kPrimitives.end(), s) != kPrimitives.end();
}

int binary_precedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

bool is_assignment_op(std::string_view op) {
  static constexpr std::array<std::string_view, 12> ops = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};
  return std::find(ops.begin(), ops.end(), op) != ops.end();
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string uri, std::vector<Diagnostic>& diags)
      : toks_(std::move(tokens)), uri_(std::move(uri)), diags_(diags) {}

  CompilationUnit parse_unit() {
    CompilationUnit unit;
    unit.uri = uri_;
    std::size_t save = pos_;
    skip_annotations();
    if (accept("package")) {
      unit.package = qualified_name(nullptr);
      expect(";");
    } else {
      pos_ = save;
    }
    while (at("import")) {
      std::size_t start = pos_;
      try {
        ImportDecl imp;
        ++pos_;
        imp.is_static = accept("static");
        imp.name = qualified_name(&imp.on_demand);
        expect(";");
        imp.span = span_from(toks_[start]);
        if (imp.is_static) {
          note(toks_[start], Severity::Note, "static import ignored");
        } else {
          unit.imports.push_back(std::move(imp));
        }
      } catch (const SyntaxError& e) {
        report(e);
        recover_member(start);
      }
    }
    while (!at_end()) {
      if (accept(";")) continue;
      std::size_t start = pos_;
      try {
        Modifiers mods = parse_modifiers();
        if (!at_type_decl_start()) fail("expected a type declaration");
        if (auto decl = parse_type_decl(mods)) unit.types.push_back(std::move(*decl));
      } catch (const SyntaxError& e) {
        report(e);
        recover_member(start);
        if (at("}")) ++pos_;  // stray closer at top level
      }
    }
    return unit;
  }

 private:
  // ---- token helpers ----

  const Token& tok(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return tok().kind == TokenKind::End; }
  bool at(std::string_view text, std::size_t k = 0) const {
    const Token& t = tok(k);
    return (t.kind == TokenKind::Operator || t.kind == TokenKind::Identifier) && t.text == text;
  }
  bool at_ident(std::size_t k = 0) const {
    const Token& t = tok(k);
    return t.kind == TokenKind::Identifier && !is_reserved_word(t.text) && t.text != "true" &&
           t.text != "false" && t.text != "null";
  }
  bool accept(std::string_view text) {
    if (!at(text)) return false;
    ++pos_;
    return true;
  }
  const Token& expect(std::string_view text) {
    if (!at(text)) fail("expected '" + std::string(text) + "'");
    return toks_[pos_++];
  }
  const Token& expect_ident() {
    if (!at_ident()) fail("expected identifier");
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError{message, pos_}; }

  static Span span_of(const Token& t) { return {t.line, t.column, t.end_line, t.end_column}; }
  Span span_from(const Token& first) const { return span_from(span_of(first)); }
  Span span_from(const Span& first) const {
    const Token& last = toks_[pos_ == 0 ? 0 : pos_ - 1];
    return {first.start_line, first.start_column, last.end_line, last.end_column};
  }
  std::size_t partner_of(std::size_t index) const {
    std::size_t p = toks_[index].partner;
    return p == static_cast<std::size_t>(-1) ? index : p;
  }
  void jump_past_group() { pos_ = partner_of(pos_) + 1; }

  void note(const Token& at_token, Severity severity, const std::string& message) {
    diags_.push_back({severity, uri_, at_token.line, at_token.column, message});
  }
  void report(const SyntaxError& e) {
    const Token& t = toks_[std::min(e.token, toks_.size() - 1)];
    std::string near = t.kind == TokenKind::End ? "end of file" : "'" + t.text + "'";
    diags_.push_back({Severity::Error, uri_, t.line, t.column, e.message + " near " + near});
  }

  // Skips to the end of the current member: past a ';' or a brace group,
  // never past the closing brace of the enclosing body.
  void recover_member(std::size_t start) {
    pos_ = std::max(start, std::size_t{0});
    while (!at_end()) {
      if (at("}")) return;
      if (at(";")) {
        ++pos_;
        return;
      }
      if (at("{")) {
        jump_past_group();
        accept(";");
        return;
      }
      if (at("(") || at("[")) {
        jump_past_group();
        continue;
      }
      ++pos_;
    }
  }

  void recover_statement(std::size_t start) {
    pos_ = start;
    while (!at_end()) {
      if (at("}")) return;
      if (at(";")) {
        ++pos_;
        return;
      }
      if (at("{")) {
        jump_past_group();
        if (at("else") || at("catch") || at("finally") || at("while")) continue;
        return;
      }
      if (at("(") || at("[")) {
        jump_past_group();
        continue;
      }
      ++pos_;
    }
  }

  std::string qualified_name(bool* on_demand) {
    std::string name = expect_ident().text;
    while (at(".")) {
      if (on_demand && at("*", 1)) {
        pos_ += 2;
        *on_demand = true;
        break;
      }
      ++pos_;
      name += '.';
      name += expect_ident().text;
    }
    return name;
  }

  // ---- declarations ----

  void skip_annotation() {
    const Token& start = expect("@");
    expect_ident();
    while (at(".") && at_ident(1)) pos_ += 2;
    if (at("(")) jump_past_group();
    note(start, Severity::Note, "annotation ignored");
  }

  void skip_annotations() {
    while (at("@") && !at("interface", 1)) skip_annotation();
  }

  Modifiers parse_modifiers() {
    Modifiers m;
    while (true) {
      if (at("@") && !at("interface", 1)) {
        skip_annotation();
        continue;
      }
      std::size_t width = 0;
      if (at("non") && at("-", 1) && at("sealed", 2)) {
        width = 3;
      } else if (tok().kind == TokenKind::Identifier &&
                 std::find(kModifierWords.begin(), kModifierWords.end(), tok().text) !=
                     kModifierWords.end()) {
        // `sealed` and `default` only count when a declaration follows.
        if (at("default") && (at(":", 1) || at("->", 1))) break;
        width = 1;
        const std::string& w = tok().text;
        if (w == "static") m.is_static = true;
        if (w == "final") m.is_final = true;
        if (w == "abstract") m.is_abstract = true;
        if (w == "private") m.is_private = true;
        if (w == "default") m.is_default = true;
      } else {
        break;
      }
      if (!m.first) m.first = span_of(tok());
      pos_ += width;
    }
    return m;
  }

  bool at_type_decl_start() const {
    return at("class") || at("interface") || at("enum") || (at("@") && at("interface", 1)) ||
           at_record_start();
  }
  bool at_record_start() const { return at("record") && at_ident(1) && (at("(", 2) || at("<", 2)); }

  void skip_type_body_after_header(const Token& start, const std::string& what) {
    note(start, Severity::Warning, what + " not supported, declaration skipped");
    while (!at_end() && !at("{")) {
      if (at("(") || at("[")) {
        jump_past_group();
      } else {
        ++pos_;
      }
    }
    if (at("{")) jump_past_group();
  }

  std::optional<TypeDecl> parse_type_decl(const Modifiers& mods) {
    const Token& kw = tok();
    Span start = mods.first ? *mods.first : span_of(kw);
    if (at("@")) {
      skip_type_body_after_header(kw, "annotation type");
      return std::nullopt;
    }
    if (at("record")) {
      skip_type_body_after_header(kw, "record");
      return std::nullopt;
    }
    TypeDecl decl;
    decl.modifiers = mods;
    if (accept("class")) {
      decl.kind = TypeDeclKind::Class;
    } else if (accept("interface")) {
      decl.kind = TypeDeclKind::Interface;
    } else if (accept("enum")) {
      decl.kind = TypeDeclKind::Enum;
    } else {
      fail("expected class, interface or enum");
    }
    const Token& name = expect_ident();
    decl.name = name.text;
    decl.name_span = span_of(name);
    if (at("<")) decl.type_params = parse_type_params();
    if (accept("extends")) {
      decl.extends.push_back(parse_type());
      while (decl.kind == TypeDeclKind::Interface && accept(",")) decl.extends.push_back(parse_type());
    }
    if (accept("implements")) {
      decl.implements.push_back(parse_type());
      while (accept(",")) decl.implements.push_back(parse_type());
    }
    if (accept("permits")) {
      parse_type();
      while (accept(",")) parse_type();
    }
    expect("{");
    if (decl.kind == TypeDeclKind::Enum) parse_enum_constants(decl);
    while (!at("}")) {
      if (at_end()) fail("unexpected end of file in type body");
      std::size_t member_start = pos_;
      try {
        parse_member(decl);
      } catch (const SyntaxError& e) {
        report(e);
        recover_member(member_start);
      }
    }
    expect("}");
    decl.decl_span = span_from(start);
    return decl;
  }

  void parse_enum_constants(TypeDecl& decl) {
    std::size_t start = pos_;
    try {
      while (!at(";") && !at("}")) {
        skip_annotations();
        const Token& name = expect_ident();
        EnumConstantDecl c;
        c.name = name.text;
        c.name_span = span_of(name);
        if (at("(")) c.args = parse_args();
        if (at("{")) {
          note(tok(), Severity::Warning, "enum constant body not supported, skipped");
          jump_past_group();
        }
        c.decl_span = span_from(name);
        decl.constants.push_back(std::move(c));
        if (!accept(",")) break;
      }
      accept(";");
    } catch (const SyntaxError& e) {
      report(e);
      pos_ = start;
      while (!at_end() && !at(";") && !at("}")) {
        if (at("(") || at("[") || at("{")) {
          jump_past_group();
        } else {
          ++pos_;
        }
      }
      accept(";");
    }
  }

  void parse_member(TypeDecl& decl) {
    if (accept(";")) return;
    if (at("{") || (at("static") && at("{", 1))) {
      InitializerDecl init;
      init.is_static = accept("static");
      init.body = parse_block();
      decl.initializers.push_back(std::move(init));
      return;
    }
    Modifiers mods = parse_modifiers();
    if (at_type_decl_start()) {
      if (auto nested = parse_type_decl(mods)) decl.nested.push_back(std::move(*nested));
      return;
    }
    Span start = mods.first ? *mods.first : span_of(tok());
    std::vector<TypeParamDecl> type_params;
    if (at("<")) type_params = parse_type_params();

    if (at_ident() && at("(", 1) && tok().text == decl.name) {
      MethodDecl m;
      const Token& name = toks_[pos_++];
      m.name = name.text;
      m.name_span = span_of(name);
      m.is_constructor = true;
      m.modifiers = mods;
      m.type_params = std::move(type_params);
      parse_method_rest(m, start);
      decl.methods.push_back(std::move(m));
      return;
    }

    TypeRef type = parse_type();
    const Token& name = expect_ident();
    if (at("(")) {
      MethodDecl m;
      m.name = name.text;
      m.name_span = span_of(name);
      m.modifiers = mods;
      m.type_params = std::move(type_params);
      m.return_type = std::move(type);
      parse_method_rest(m, start);
      decl.methods.push_back(std::move(m));
      return;
    }
    if (!type_params.empty()) fail("type parameters on a field");
    const Token* current = &name;
    while (true) {
      VarDecl v;
      v.name = current->text;
      v.name_span = span_of(*current);
      v.type = type;
      v.is_final = mods.is_final;
      v.is_static = mods.is_static;
      while (at("[") && at("]", 1)) {
        pos_ += 2;
        ++v.type.dims;
      }
      if (accept("=")) v.init = parse_var_init();
      v.decl_span = span_from(start);
      decl.fields.push_back(std::move(v));
      if (!accept(",")) break;
      current = &expect_ident();
    }
    expect(";");
  }

  void parse_method_rest(MethodDecl& m, const Span& start) {
    expect("(");
    while (!at(")")) {
      Modifiers pm = parse_modifiers();
      Span pstart = pm.first ? *pm.first : span_of(tok());
      TypeRef t = parse_type();
      VarDecl p;
      if (accept("...")) {
        p.varargs = true;
        ++t.dims;
      }
      if (at("this")) {  // receiver parameter
        ++pos_;
      } else {
        const Token& pname = expect_ident();
        p.name = pname.text;
        p.name_span = span_of(pname);
        while (at("[") && at("]", 1)) {
          pos_ += 2;
          ++t.dims;
        }
        p.type = std::move(t);
        p.is_final = pm.is_final;
        p.decl_span = span_from(pstart);
        m.params.push_back(std::move(p));
      }
      if (!accept(",")) break;
    }
    expect(")");
    while (at("[") && at("]", 1)) {
      pos_ += 2;
      if (m.return_type) ++m.return_type->dims;
    }
    if (accept("throws")) {
      m.throws.push_back(parse_type());
      while (accept(",")) m.throws.push_back(parse_type());
    }
    if (at("{")) {
      m.body = parse_block();
    } else if (at("default")) {
      while (!at_end() && !at(";")) {
        if (at("(") || at("{") || at("[")) {
          jump_past_group();
        } else {
          ++pos_;
        }
      }
      expect(";");
    } else {
      expect(";");
    }
    m.decl_span = span_from(start);
  }

  std::vector<TypeParamDecl> parse_type_params() {
    std::vector<TypeParamDecl> out;
    expect("<");
    while (true) {
      skip_annotations();
      const Token& name = expect_ident();
      TypeParamDecl tp;
      tp.name = name.text;
      tp.name_span = span_of(name);
      if (accept("extends")) {
        tp.bounds.push_back(parse_type());
        while (accept("&")) tp.bounds.push_back(parse_type());
      }
      tp.decl_span = span_from(name);
      out.push_back(std::move(tp));
      if (!accept(",")) break;
    }
    expect(">");
    return out;
  }

  // ---- types ----

  TypeRef parse_type(bool allow_dims = true) {
    skip_annotations();
    const Token& first = tok();
    TypeRef t;
    if (accept("?")) {
      t.wildcard = true;
      t.names.push_back("?");
      t.name_spans.push_back(span_of(first));
      if (accept("extends") || accept("super")) t.args.push_back(parse_type());
      t.span = span_from(first);
      return t;
    }
    if (first.kind == TokenKind::Identifier && is_primitive(first.text)) {
      ++pos_;
      t.primitive = true;
      t.names.push_back(first.text);
      t.name_spans.push_back(span_of(first));
    } else {
      const Token& name = expect_ident();
      t.names.push_back(name.text);
      t.name_spans.push_back(span_of(name));
      if (at("<")) parse_type_args(t.args);
      while (at(".") && at_ident(1)) {
        ++pos_;
        const Token& seg = toks_[pos_++];
        t.names.push_back(seg.text);
        t.name_spans.push_back(span_of(seg));
        if (at("<")) parse_type_args(t.args);
      }
      t.is_var = t.names.size() == 1 && t.names[0] == "var" && t.args.empty();
    }
    while (allow_dims && at("[") && at("]", 1)) {
      pos_ += 2;
      ++t.dims;
    }
    t.span = span_from(first);
    return t;
  }

  void parse_type_args(std::vector<TypeRef>& out) {
    expect("<");
    if (accept(">")) return;  // diamond
    while (true) {
      out.push_back(parse_type());
      if (!accept(",")) break;
    }
    expect(">");
  }

  bool try_parse_type(TypeRef& out) {
    std::size_t save = pos_;
    try {
      out = parse_type();
      return true;
    } catch (const SyntaxError&) {
      pos_ = save;
      return false;
    }
  }

  // ---- statements ----

  Stmt parse_block() {
    const Token& open = expect("{");
    Stmt b;
    b.kind = StmtKind::Block;
    while (!at("}")) {
      if (at_end()) fail("unexpected end of file in block");
      std::size_t start = pos_;
      try {
        b.children.push_back(parse_statement());
      } catch (const SyntaxError& e) {
        report(e);
        recover_statement(start);
        if (pos_ == start) ++pos_;
      }
    }
    expect("}");
    b.span = span_from(open);
    return b;
  }

  bool looks_like_local_decl() {
    std::size_t save = pos_;
    bool result = false;
    try {
      bool had_modifier = false;
      while (true) {
        if (at("@") && !at("interface", 1)) {
          expect("@");
          expect_ident();
          while (at(".") && at_ident(1)) pos_ += 2;
          if (at("(")) jump_past_group();
          had_modifier = true;
        } else if (at("final")) {
          ++pos_;
          had_modifier = true;
        } else {
          break;
        }
      }
      TypeRef t = parse_type();
      result = at_ident() && (at("=", 1) || at(";", 1) || at(",", 1) || at("[", 1) || at(":", 1) ||
                              at(")", 1));
      if (had_modifier && at_ident()) result = true;
    } catch (const SyntaxError&) {
      result = false;
    }
    pos_ = save;
    return result;
  }

  // Parses `[final] Type name [= init] {, name [= init]}` without the ';'.
  void parse_local_vars(std::vector<VarDecl>& out) {
    const Token& first = tok();
    bool is_final = false;
    while (true) {
      if (at("@") && !at("interface", 1)) {
        skip_annotation();
      } else if (accept("final")) {
        is_final = true;
      } else {
        break;
      }
    }
    Span start = span_of(first);
    TypeRef type = parse_type();
    while (true) {
      const Token& name = expect_ident();
      VarDecl v;
      v.name = name.text;
      v.name_span = span_of(name);
      v.type = type;
      v.is_final = is_final;
      while (at("[") && at("]", 1)) {
        pos_ += 2;
        ++v.type.dims;
      }
      if (accept("=")) v.init = parse_var_init();
      v.decl_span = span_from(start);
      out.push_back(std::move(v));
      if (!accept(",")) break;
    }
  }

  Expr parse_var_init() { return at("{") ? parse_array_init() : parse_expr(); }

  bool at_local_type_decl() const {
    std::size_t k = 0;
    while (at("final", k) || at("abstract", k) || at("static", k) || at("strictfp", k)) ++k;
    if (at("class", k) || at("interface", k) || at("enum", k)) return true;
    return at("record", k) && at_ident(k + 1) && (at("(", k + 2) || at("<", k + 2));
  }

  Stmt parse_statement() {
    const Token& first = tok();
    Stmt s;
    if (at("{")) return parse_block();
    if (accept(";")) {
      s.kind = StmtKind::Simple;
      s.span = span_of(first);
      return s;
    }
    if (at_local_type_decl()) {
      note(first, Severity::Warning, "local type declaration not supported, skipped");
      while (!at_end() && !at("{")) {
        if (at("(") || at("[")) {
          jump_past_group();
        } else {
          ++pos_;
        }
      }
      if (at("{")) jump_past_group();
      s.kind = StmtKind::Skipped;
      s.span = span_from(first);
      return s;
    }
    if (accept("if")) {
      s.kind = StmtKind::Control;
      expect("(");
      s.exprs.push_back(parse_expr());
      expect(")");
      s.children.push_back(parse_statement());
      if (accept("else")) s.children.push_back(parse_statement());
    } else if (accept("while")) {
      s.kind = StmtKind::Control;
      expect("(");
      s.exprs.push_back(parse_expr());
      expect(")");
      s.children.push_back(parse_statement());
    } else if (accept("do")) {
      s.kind = StmtKind::Control;
      s.children.push_back(parse_statement());
      expect("while");
      expect("(");
      s.exprs.push_back(parse_expr());
      expect(")");
      expect(";");
    } else if (accept("for")) {
      parse_for(s);
    } else if (accept("return") || accept("throw")) {
      s.kind = StmtKind::Simple;
      if (!at(";")) s.exprs.push_back(parse_expr());
      expect(";");
    } else if (accept("break") || accept("continue")) {
      s.kind = StmtKind::Simple;
      if (at_ident()) ++pos_;
      expect(";");
    } else if (accept("assert")) {
      s.kind = StmtKind::Simple;
      s.exprs.push_back(parse_expr());
      if (accept(":")) s.exprs.push_back(parse_expr());
      expect(";");
    } else if (accept("synchronized")) {
      s.kind = StmtKind::Control;
      expect("(");
      s.exprs.push_back(parse_expr());
      expect(")");
      s.children.push_back(parse_block());
    } else if (accept("try")) {
      parse_try(s);
    } else if (accept("switch")) {
      parse_switch(s);
    } else if (at_ident() && at(":", 1)) {
      pos_ += 2;
      s.kind = StmtKind::Control;
      s.children.push_back(parse_statement());
    } else if (looks_like_local_decl()) {
      s.kind = StmtKind::LocalVars;
      parse_local_vars(s.vars);
      expect(";");
    } else {
      s.kind = StmtKind::Simple;
      s.exprs.push_back(parse_expr());
      expect(";");
    }
    s.span = span_from(first);
    return s;
  }

  void parse_for(Stmt& s) {
    expect("(");
    // Enhanced for: [final] Type name ':'
    if (looks_like_local_decl()) {
      std::size_t save = pos_;
      std::vector<VarDecl> vars;
      const Token& first = tok();
      bool is_final = false;
      while (true) {
        if (accept("final")) {
          is_final = true;
        } else if (at("@")) {
          skip_annotation();
        } else {
          break;
        }
      }
      TypeRef t;
      if (try_parse_type(t) && at_ident() && at(":", 1)) {
        VarDecl v;
        const Token& name = toks_[pos_++];
        v.name = name.text;
        v.name_span = span_of(name);
        v.type = std::move(t);
        v.is_final = is_final;
        v.decl_span = span_from(first);
        expect(":");
        s.kind = StmtKind::ForEach;
        s.exprs.push_back(parse_expr());
        s.vars.push_back(std::move(v));
        expect(")");
        s.children.push_back(parse_statement());
        return;
      }
      pos_ = save;
      s.kind = StmtKind::For;
      parse_local_vars(s.vars);
    } else {
      s.kind = StmtKind::For;
      while (!at(";")) {
        s.exprs.push_back(parse_expr());
        if (!accept(",")) break;
      }
    }
    expect(";");
    if (!at(";")) s.exprs.push_back(parse_expr());
    expect(";");
    while (!at(")")) {
      s.exprs.push_back(parse_expr());
      if (!accept(",")) break;
    }
    expect(")");
    s.children.push_back(parse_statement());
  }

  void parse_try(Stmt& s) {
    s.kind = StmtKind::Try;
    if (accept("(")) {
      while (!at(")")) {
        if (looks_like_local_decl()) {
          parse_local_vars(s.vars);
        } else {
          s.exprs.push_back(parse_expr());
        }
        if (!accept(";")) break;
      }
      expect(")");
    }
    s.children.push_back(parse_block());
    while (at("catch")) {
      const Token& kw = toks_[pos_++];
      Stmt c;
      c.kind = StmtKind::Catch;
      expect("(");
      Modifiers m = parse_modifiers();
      Span pstart = m.first ? *m.first : span_of(tok());
      VarDecl v;
      v.type = parse_type();
      while (accept("|")) parse_type();  // union: the first alternative types the parameter
      const Token& name = expect_ident();
      v.name = name.text;
      v.name_span = span_of(name);
      v.is_final = m.is_final;
      v.decl_span = span_from(pstart);
      expect(")");
      c.vars.push_back(std::move(v));
      c.children.push_back(parse_block());
      c.span = span_from(kw);
      s.children.push_back(std::move(c));
    }
    if (accept("finally")) s.children.push_back(parse_block());
    if (s.children.size() == 1 && s.vars.empty() && s.exprs.empty()) {
      fail("try without catch or finally");
    }
  }

  void parse_switch(Stmt& s) {
    s.kind = StmtKind::Switch;
    expect("(");
    s.exprs.push_back(parse_expr());
    expect(")");
    expect("{");
    while (!at("}")) {
      if (at_end()) fail("unexpected end of file in switch");
      if (!at("case") && !at("default")) fail("expected case label");
      const Token& first = tok();
      Stmt group;
      group.kind = StmtKind::CaseGroup;
      bool arrow = false;
      while (at("case") || at("default")) {
        if (accept("default")) {
        } else {
          ++pos_;
          bool saved = in_case_label_;
          in_case_label_ = true;
          group.exprs.push_back(parse_conditional());
          while (accept(",")) group.exprs.push_back(parse_conditional());
          in_case_label_ = saved;
        }
        if (accept("->")) {
          arrow = true;
          break;
        }
        expect(":");
      }
      if (arrow) {
        group.children.push_back(parse_statement());
      } else {
        while (!at("case") && !at("default") && !at("}")) {
          if (at_end()) fail("unexpected end of file in switch");
          std::size_t start = pos_;
          try {
            group.children.push_back(parse_statement());
          } catch (const SyntaxError& e) {
            report(e);
            recover_statement(start);
            if (pos_ == start) ++pos_;
          }
        }
      }
      group.span = span_from(first);
      s.children.push_back(std::move(group));
    }
    expect("}");
  }

  // ---- expressions ----

  bool lambda_ahead() const {
    if (in_case_label_) return false;
    if (at_ident() && at("->", 1)) return true;
    if (at("(")) {
      std::size_t close = partner_of(pos_);
      return close + 1 < toks_.size() && toks_[close + 1].text == "->" &&
             toks_[close + 1].kind == TokenKind::Operator;
    }
    return false;
  }

  Expr skip_lambda() {
    const Token& first = tok();
    note(first, Severity::Warning, "lambda expression not supported, skipped");
    if (at("(")) {
      jump_past_group();
    } else {
      ++pos_;
    }
    expect("->");
    if (at("{")) {
      jump_past_group();
    } else {
      while (!at_end() && !at(")") && !at("]") && !at("}") && !at(",") && !at(";")) {
        if (at("(") || at("[") || at("{")) {
          jump_past_group();
        } else {
          ++pos_;
        }
      }
    }
    Expr e;
    e.kind = ExprKind::Skipped;
    e.span = span_from(first);
    return e;
  }

  Expr parse_expr() { return parse_assignment(); }

  // Recognizes operators spelled with several '>' tokens. Returns the number
  // of tokens the operator spans, 0 when no operator starts here.
  std::size_t peek_operator(std::string& op) const {
    const Token& t = tok();
    if (t.kind == TokenKind::Operator && t.text == ">") {
      if (t.joined_next && at(">", 1)) {
        const Token& t1 = tok(1);
        if (t1.joined_next && at(">", 2)) {
          if (tok(2).joined_next && at("=", 3)) {
            op = ">>>=";
            return 4;
          }
          op = ">>>";
          return 3;
        }
        if (t1.joined_next && at("=", 2)) {
          op = ">>=";
          return 3;
        }
        op = ">>";
        return 2;
      }
      if (t.joined_next && at("=", 1)) {
        op = ">=";
        return 2;
      }
      op = ">";
      return 1;
    }
    if (t.kind == TokenKind::Operator ||
        (t.kind == TokenKind::Identifier && t.text == "instanceof")) {
      op = t.text;
      return 1;
    }
    return 0;
  }

  Expr parse_assignment() {
    if (lambda_ahead()) return skip_lambda();
    const Token& first = tok();
    Expr lhs = parse_conditional();
    std::string op;
    std::size_t width = peek_operator(op);
    if (width > 0 && is_assignment_op(op)) {
      pos_ += width;
      Expr e;
      e.kind = ExprKind::Assign;
      e.op = op;
      e.operands.push_back(std::move(lhs));
      e.operands.push_back(parse_assignment());
      e.span = span_from(first);
      return e;
    }
    return lhs;
  }

  Expr parse_conditional() {
    const Token& first = tok();
    Expr c = parse_binary(1);
    if (!accept("?")) return c;
    Expr e;
    e.kind = ExprKind::Conditional;
    e.operands.push_back(std::move(c));
    e.operands.push_back(lambda_ahead() ? skip_lambda() : parse_conditional_branch());
    expect(":");
    e.operands.push_back(lambda_ahead() ? skip_lambda() : parse_conditional());
    e.span = span_from(first);
    return e;
  }

  Expr parse_conditional_branch() {
    bool saved = in_case_label_;
    in_case_label_ = false;
    Expr e = parse_expr();
    in_case_label_ = saved;
    return e;
  }

  Expr parse_binary(int min_prec) {
    const Token& first = tok();
    Expr lhs = parse_unary();
    while (true) {
      std::string op;
      std::size_t width = peek_operator(op);
      if (width == 0) break;
      int prec = binary_precedence(op);
      if (prec == 0 || prec < min_prec) break;
      pos_ += width;
      Expr e;
      if (op == "instanceof") {
        e.kind = ExprKind::InstanceOf;
        accept("final");
        e.type = parse_type();
        if (at_ident()) {
          note(tok(), Severity::Warning, "pattern variable not supported, binding ignored");
          ++pos_;
        }
        e.operands.push_back(std::move(lhs));
      } else {
        e.kind = ExprKind::Binary;
        e.op = op;
        e.operands.push_back(std::move(lhs));
        e.operands.push_back(parse_binary(prec + 1));
      }
      e.span = span_from(first);
      lhs = std::move(e);
    }
    return lhs;
  }

  bool starts_cast_operand(const Token& t) const {
    switch (t.kind) {
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral:
        return true;
      case TokenKind::Identifier:
        return t.text != "instanceof";
      case TokenKind::Operator:
        return t.text == "(" || t.text == "!" || t.text == "~";
      case TokenKind::End:
        return false;
    }
    return false;
  }

  Expr parse_unary() {
    const Token& first = tok();
    if (at("++") || at("--") || at("+") || at("-") || at("!") || at("~")) {
      Expr e;
      e.kind = ExprKind::Unary;
      e.op = toks_[pos_++].text;
      e.operands.push_back(parse_unary());
      e.span = span_from(first);
      return e;
    }
    if (lambda_ahead()) return skip_lambda();
    if (at("(")) {
      std::size_t save = pos_;
      std::size_t close = partner_of(pos_);
      ++pos_;
      TypeRef t;
      if (try_parse_type(t)) {
        while (accept("&")) parse_type();  // intersection cast
        if (pos_ == close && close + 1 < toks_.size()) {
          const Token& next = toks_[close + 1];
          bool cast = t.primitive ? !(next.kind == TokenKind::Operator &&
                                      binary_precedence(next.text) > 0 && next.text != "+" &&
                                      next.text != "-")
                                  : starts_cast_operand(next);
          if (cast) {
            pos_ = close + 1;
            Expr e;
            e.kind = ExprKind::Cast;
            e.type = std::move(t);
            e.operands.push_back(lambda_ahead() ? skip_lambda() : parse_unary());
            e.span = span_from(first);
            return e;
          }
        }
      }
      pos_ = save;
    }
    return parse_postfix(parse_primary());
  }

  std::vector<Expr> parse_args() {
    std::vector<Expr> args;
    expect("(");
    bool saved = in_case_label_;
    in_case_label_ = false;
    while (!at(")")) {
      args.push_back(parse_expr());
      if (!accept(",")) break;
    }
    in_case_label_ = saved;
    expect(")");
    return args;
  }

  Expr parse_array_init() {
    const Token& open = expect("{");
    Expr e;
    e.kind = ExprKind::ArrayInit;
    while (!at("}")) {
      e.operands.push_back(parse_var_init());
      if (!accept(",")) break;
    }
    expect("}");
    e.span = span_from(open);
    return e;
  }

  Expr parse_new() {
    const Token& kw = expect("new");
    if (at("<")) {
      std::vector<TypeRef> ignored;
      parse_type_args(ignored);
    }
    Expr e;
    e.type = parse_type(false);
    if (at("[")) {
      e.kind = ExprKind::NewArray;
      while (at("[")) {
        ++pos_;
        if (!at("]")) e.operands.push_back(parse_expr());
        expect("]");
        ++e.type->dims;
      }
      if (at("{")) e.operands.push_back(parse_array_init());
    } else {
      e.kind = ExprKind::New;
      e.operands = parse_args();
      if (at("{")) {
        note(tok(), Severity::Warning, "anonymous class body not supported, skipped");
        jump_past_group();
      }
    }
    e.span = span_from(kw);
    return e;
  }

  Expr parse_primary() {
    const Token& t = tok();
    Expr e;
    e.span = span_of(t);
    switch (t.kind) {
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral:
        ++pos_;
        e.kind = ExprKind::Literal;
        e.name = t.text;
        return e;
      case TokenKind::End:
        fail("unexpected end of file in expression");
      default:
        break;
    }
    if (at("true") || at("false") || at("null")) {
      ++pos_;
      e.kind = ExprKind::Literal;
      e.name = t.text;
      return e;
    }
    if (at("this") || at("super")) {
      ++pos_;
      if (at("(")) {
        e.kind = ExprKind::ConstructorCall;
        e.name = t.text;
        e.name_span = span_of(t);
        e.operands = parse_args();
      } else {
        e.kind = t.text == "this" ? ExprKind::This : ExprKind::Super;
      }
      e.span = span_from(t);
      return e;
    }
    if (at("new")) return parse_new();
    if (at("switch")) {
      note(t, Severity::Warning, "switch expression not supported, skipped");
      ++pos_;
      if (at("(")) jump_past_group();
      if (at("{")) jump_past_group();
      e.kind = ExprKind::Skipped;
      e.span = span_from(t);
      return e;
    }
    if (t.kind == TokenKind::Identifier && is_primitive(t.text)) {
      TypeRef type = parse_type();
      if (accept(".")) {
        expect("class");
        e.kind = ExprKind::ClassLiteral;
        e.type = std::move(type);
        e.span = span_from(t);
        return e;
      }
      if (at("::")) return skip_method_ref(std::nullopt, t);
      fail("unexpected primitive type in expression");
    }
    if (accept("(")) {
      Expr inner = parse_expr();
      expect(")");
      return inner;
    }
    if (at_ident()) {
      ++pos_;
      e.name = t.text;
      e.name_span = span_of(t);
      if (at("(")) {
        e.kind = ExprKind::Call;
        e.operands = parse_args();
      } else {
        e.kind = ExprKind::Name;
      }
      e.span = span_from(t);
      return e;
    }
    fail("unexpected token in expression");
  }

  // Converts a Name/FieldAccess chain into a type reference, for class
  // literals and array types written in expression position.
  std::optional<TypeRef> chain_to_type(const Expr& e) const {
    if (e.kind == ExprKind::Name) {
      TypeRef t;
      t.names.push_back(e.name);
      t.name_spans.push_back(e.name_span);
      t.span = e.span;
      return t;
    }
    if (e.kind == ExprKind::FieldAccess && !e.operands.empty()) {
      auto t = chain_to_type(e.operands[0]);
      if (!t) return std::nullopt;
      t->names.push_back(e.name);
      t->name_spans.push_back(e.name_span);
      t->span.end_line = e.span.end_line;
      t->span.end_column = e.span.end_column;
      return t;
    }
    return std::nullopt;
  }

  Expr skip_method_ref(std::optional<Expr> receiver, const Token& first) {
    note(tok(), Severity::Warning, "method reference not supported, skipped");
    expect("::");
    if (at("<")) {
      std::vector<TypeRef> ignored;
      parse_type_args(ignored);
    }
    if (at("new") || at_ident()) {
      ++pos_;
    } else {
      fail("expected method name after '::'");
    }
    Expr e;
    e.kind = ExprKind::Skipped;
    if (receiver) e.operands.push_back(std::move(*receiver));
    e.span = span_from(first);
    return e;
  }

  Expr parse_postfix(Expr e) {
    Span start = e.span;
    while (true) {
      if (at(".")) {
        if (at("class", 1)) {
          auto type = chain_to_type(e);
          if (!type) fail("class literal on a non-type expression");
          pos_ += 2;
          Expr lit;
          lit.kind = ExprKind::ClassLiteral;
          lit.type = std::move(type);
          lit.span = span_from(start);
          e = std::move(lit);
          continue;
        }
        if (at("this", 1)) {
          auto type = chain_to_type(e);
          if (!type) fail("qualified this on a non-type expression");
          pos_ += 2;
          Expr self;
          self.kind = ExprKind::This;
          self.type = std::move(type);
          self.span = span_from(start);
          e = std::move(self);
          continue;
        }
        if (at("new", 1)) {
          ++pos_;
          Expr created = parse_new();
          Expr wrap;
          wrap.kind = ExprKind::Skipped;
          wrap.operands.push_back(std::move(e));
          wrap.operands.push_back(std::move(created));
          wrap.span = span_from(start);
          e = std::move(wrap);
          continue;
        }
        if (at("super", 1)) {
          pos_ += 2;
          Expr sup;
          sup.kind = ExprKind::Super;
          sup.span = span_from(start);
          e = std::move(sup);
          continue;
        }
        ++pos_;
        if (at("<")) {
          std::vector<TypeRef> ignored;
          parse_type_args(ignored);
        }
        const Token& name = expect_ident();
        Expr next;
        next.name = name.text;
        next.name_span = span_of(name);
        next.has_receiver = true;
        next.operands.push_back(std::move(e));
        if (at("(")) {
          next.kind = ExprKind::Call;
          for (Expr& a : parse_args()) next.operands.push_back(std::move(a));
        } else {
          next.kind = ExprKind::FieldAccess;
        }
        next.span = span_from(start);
        e = std::move(next);
      } else if (at("[")) {
        if (at("]", 1)) {
          auto type = chain_to_type(e);
          if (!type) fail("array type on a non-type expression");
          while (at("[") && at("]", 1)) {
            pos_ += 2;
            ++type->dims;
          }
          if (accept(".")) {
            expect("class");
            Expr lit;
            lit.kind = ExprKind::ClassLiteral;
            lit.type = std::move(type);
            lit.span = span_from(start);
            e = std::move(lit);
            continue;
          }
          if (at("::")) {
            e = skip_method_ref(std::nullopt, toks_[pos_]);
            continue;
          }
          fail("unexpected array type in expression");
        }
        ++pos_;
        Expr access;
        access.kind = ExprKind::ArrayAccess;
        access.operands.push_back(std::move(e));
        access.operands.push_back(parse_expr());
        expect("]");
        access.span = span_from(start);
        e = std::move(access);
      } else if (at("::")) {
        e = skip_method_ref(std::move(e), tok());
      } else if (at("++") || at("--")) {
        Expr post;
        post.kind = ExprKind::Unary;
        post.op = "post" + toks_[pos_++].text;
        post.operands.push_back(std::move(e));
        post.span = span_from(start);
        e = std::move(post);
      } else {
        break;
      }
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string uri_;
  std::vector<Diagnostic>& diags_;
  bool in_case_label_ = false;
};

}  // namespace

ParseResult parse_source(std::string_view text, std::string uri) {
  ParseResult result;
  result.unit.uri = uri;
  std::vector<Token> tokens;
  try {
    tokens = tokenize(text);
  } catch (const LexError& e) {
    result.fatal = Diagnostic{Severity::Error, uri, e.line, e.column, e.what()};
    return result;
  }
  Parser parser(std::move(tokens), uri, result.diagnostics);
  result.unit = parser.parse_unit();
  return result;
}

}  // namespace scg::extract
