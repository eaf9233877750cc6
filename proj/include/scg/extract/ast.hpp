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

#include <optional>
#include <string>
#include <vector>

#include "scg/model.hpp"

// Syntax tree for the supported Java subset. Only what the extractor needs is
// kept: names, spans and the structure that decides scoping and references.
namespace scg::extract {

// Zero-based, end exclusive.
struct Span {
  int start_line = 0;
  int start_column = 0;
  int end_line = 0;
  int end_column = 0;
};

struct TypeRef {
  std::vector<std::string> names;  // qualified segments, e.g. {"java", "util", "List"}
  std::vector<Span> name_spans;
  std::vector<TypeRef> args;  // type arguments of every segment, in source order
  int dims = 0;
  bool primitive = false;  // primitives and void
  bool is_var = false;     // local `var`
  bool wildcard = false;   // `?`, possibly with a bound in args
  Span span;

  const std::string& simple_name() const { return names.back(); }
};

enum class ExprKind {
  Name,
  FieldAccess,      // operands[0].name
  Call,             // [operands[0].]name(args), has_receiver tells
  ConstructorCall,  // this(...) / super(...), name holds the keyword
  New,              // new type(args)
  NewArray,         // new type[dims...] or new type[]{...}
  ArrayInit,
  This,    // optional qualifier in `type`
  Super,
  Literal,
  Unary,
  Binary,
  Assign,
  Conditional,
  Cast,
  InstanceOf,
  ArrayAccess,
  ClassLiteral,
  Skipped,  // unsupported construct; operands still get resolved
};

struct Expr {
  ExprKind kind = ExprKind::Literal;
  std::string name;
  Span name_span;
  std::vector<Expr> operands;
  bool has_receiver = false;
  std::optional<TypeRef> type;
  std::string op;
  Span span;
};

struct VarDecl {
  std::string name;
  Span name_span;
  Span decl_span;
  TypeRef type;
  std::optional<Expr> init;
  bool is_final = false;
  bool is_static = false;
  bool varargs = false;
};

enum class StmtKind {
  Block,      // children, own scope
  LocalVars,  // vars, declared into the enclosing scope
  Simple,     // exprs only: expression statement, return, throw, assert...
  Control,    // exprs then children, no scope of its own: if, while, do, sync, labeled
  For,        // scope: vars, exprs (init, condition, update), children (body)
  ForEach,    // scope: exprs[0] iterable, vars[0] element, children[0] body
  Try,        // vars: resources; children: try block, catches, optional finally block
  Catch,      // vars[0] parameter; children[0] block
  Switch,     // exprs[0] selector; children: case groups sharing one scope
  CaseGroup,  // exprs: labels; children: statements
  Skipped,
};

struct Stmt {
  StmtKind kind = StmtKind::Skipped;
  Span span;
  std::vector<VarDecl> vars;
  std::vector<Expr> exprs;
  std::vector<Stmt> children;
};

struct Modifiers {
  bool is_static = false;
  bool is_final = false;
  bool is_abstract = false;
  bool is_private = false;
  bool is_default = false;
  // Position of the first non-annotation modifier, if any.
  std::optional<Span> first;
};

struct TypeParamDecl {
  std::string name;
  Span name_span;
  Span decl_span;
  std::vector<TypeRef> bounds;
};

struct MethodDecl {
  std::string name;
  Span name_span;
  Span decl_span;
  bool is_constructor = false;
  Modifiers modifiers;
  std::vector<TypeParamDecl> type_params;
  std::optional<TypeRef> return_type;  // absent for constructors
  std::vector<VarDecl> params;
  std::vector<TypeRef> throws;
  std::optional<Stmt> body;  // Block
};

struct EnumConstantDecl {
  std::string name;
  Span name_span;
  Span decl_span;
  std::vector<Expr> args;
};

struct InitializerDecl {
  bool is_static = false;
  Stmt body;
};

enum class TypeDeclKind { Class, Interface, Enum };

struct TypeDecl {
  TypeDeclKind kind = TypeDeclKind::Class;
  std::string name;
  Span name_span;
  Span decl_span;
  Modifiers modifiers;
  std::vector<TypeParamDecl> type_params;
  std::vector<TypeRef> extends;  // superclass, or superinterfaces of an interface
  std::vector<TypeRef> implements;
  std::vector<EnumConstantDecl> constants;
  std::vector<VarDecl> fields;
  std::vector<MethodDecl> methods;  // constructors included, source order
  std::vector<InitializerDecl> initializers;
  std::vector<TypeDecl> nested;
};

struct ImportDecl {
  std::string name;  // dotted, without the trailing ".*"
  bool on_demand = false;
  bool is_static = false;
  Span span;
};

struct CompilationUnit {
  std::string uri;
  std::string package;  // dotted, empty for the default package
  std::vector<ImportDecl> imports;
  std::vector<TypeDecl> types;
};

inline SourceLocation to_location(const std::string& uri, const Span& s) {
  return SourceLocation{uri, s.start_line, s.start_column, s.end_line, s.end_column};
}

}  // namespace scg::extract
