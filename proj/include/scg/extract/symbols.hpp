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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scg/extract/ast.hpp"
#include "scg/extract/diagnostics.hpp"
#include "scg/stable_id.hpp"

namespace scg::extract {

struct TypeSymbol;

// Static type of an expression as far as the extractor tracks it: a
// project-local type (or nothing) plus array dimensions.
struct StaticType {
  const TypeSymbol* type = nullptr;
  int dims = 0;
};

struct TypeParamSymbol {
  std::string name;
  StableSymbolId id;
  const TypeParamDecl* decl = nullptr;
};

struct FieldSymbol {
  std::string name;
  StableSymbolId id;
  NodeKind kind = NodeKind::VARIABLE;
  const TypeSymbol* owner = nullptr;
  const VarDecl* decl = nullptr;               // null for enum constants
  const EnumConstantDecl* constant = nullptr;  // set for enum constants
  StaticType type;
};

struct MethodSymbol {
  std::string name;
  StableSymbolId id;
  std::size_t overload_index = 0;
  bool is_constructor = false;
  bool is_static = false;
  bool is_private = false;
  bool varargs = false;
  std::size_t arity = 0;
  const TypeSymbol* owner = nullptr;
  const MethodDecl* decl = nullptr;
  std::vector<TypeParamSymbol> type_params;
  StaticType return_type;

  bool accepts(std::size_t argc) const {
    return varargs ? argc + 1 >= arity : argc == arity;
  }
};

struct FileScope;

struct TypeSymbol {
  std::string name;
  std::string qualified_name;  // dotted, nested types joined with '.'
  std::string package;
  StableSymbolId id;
  NodeKind kind = NodeKind::CLASS;
  const TypeDecl* decl = nullptr;
  const FileScope* file = nullptr;
  const TypeSymbol* outer = nullptr;
  std::vector<TypeParamSymbol> type_params;
  // Resolved project-local supertypes in declaration order; the superclass
  // first when it is project-local.
  std::vector<const TypeSymbol*> supertypes;
  const TypeSymbol* superclass = nullptr;
  // True when some declared supertype lives outside the project (enums
  // always extend java.lang.Enum).
  bool external_supertype = false;
  struct DeclaredSupertype {
    const TypeRef* ref = nullptr;
    const TypeSymbol* type = nullptr;  // null when outside the project
  };
  std::vector<DeclaredSupertype> declared_supertypes;
  std::map<std::string, std::vector<MethodSymbol>, std::less<>> methods;
  std::vector<MethodSymbol> constructors;
  std::map<const MethodDecl*, const MethodSymbol*> method_by_decl;
  // Enum constants first, then fields, each in source order. Lookup by name
  // goes through `field_index`; a repeated name keeps its first declaration.
  std::vector<FieldSymbol> field_list;
  std::map<std::string, std::size_t, std::less<>> field_index;
  std::map<std::string, const TypeSymbol*, std::less<>> nested;
};

struct FileScope {
  std::string uri;
  std::string package;
  const CompilationUnit* unit = nullptr;
  std::map<std::string, const TypeSymbol*, std::less<>> top_level;
  std::map<std::string, std::string, std::less<>> single_imports;  // simple -> qualified
  std::vector<std::string> on_demand_imports;
};

// Identifier for the n-th (n >= 1) colliding declaration of `name` inside
// `owner`: "name(+n).", the overload form, whatever the kind.
StableSymbolId disambiguated_id(std::string_view owner, std::string_view name, std::size_t n);

// Result of a method lookup by name and argument count.
struct MethodMatch {
  const MethodSymbol* method = nullptr;
  bool ambiguous = false;
};

// Project-wide declarations. Built in one pass over every file, then
// supertypes and member types are resolved; afterwards it is immutable and
// shared by the per-file body resolution.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(const SymbolTable&) = delete;
  SymbolTable& operator=(const SymbolTable&) = delete;
  SymbolTable(SymbolTable&&) = default;
  SymbolTable& operator=(SymbolTable&&) = default;

  const TypeSymbol* find_type(std::string_view qualified_name) const;
  const FileScope* file(std::string_view uri) const;
  std::span<const std::unique_ptr<FileScope>> files() const { return files_; }
  std::span<const std::unique_ptr<TypeSymbol>> types() const { return types_; }
  // The symbol registered for a declaration; null for duplicates that lost.
  const TypeSymbol* symbol_for(const TypeDecl* decl) const;

  // Member lookup through the type and its project-local supertypes,
  // nearest declaration first.
  MethodMatch lookup_method(const TypeSymbol& type, std::string_view name, std::size_t argc) const;
  MethodMatch lookup_constructor(const TypeSymbol& type, std::size_t argc) const;
  const FieldSymbol* lookup_field(const TypeSymbol& type, std::string_view name) const;
  const TypeSymbol* lookup_member_type(const TypeSymbol& type, std::string_view name) const;
  // True when the type or one of its transitive supertypes has a supertype
  // outside the project, so a failed member lookup proves nothing.
  bool has_external_ancestry(const TypeSymbol& type) const;

  // Resolves a type name as written inside `context` (its type parameters,
  // member types, imports and package). `method` adds a method's type
  // parameters. Returns the project-local type, or null.
  struct Resolved {
    const TypeSymbol* type = nullptr;
    const TypeParamSymbol* type_param = nullptr;
  };
  Resolved resolve_type(const TypeRef& ref, const FileScope& file, const TypeSymbol* context,
                        const MethodSymbol* method = nullptr) const;
  Resolved resolve_simple_type(std::string_view name, const FileScope& file,
                               const TypeSymbol* context,
                               const MethodSymbol* method = nullptr) const;
  StaticType static_type(const TypeRef& ref, const FileScope& file, const TypeSymbol* context,
                         const MethodSymbol* method = nullptr) const;

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  friend SymbolTable build_symbol_table(std::span<const CompilationUnit> units);

  std::vector<std::unique_ptr<FileScope>> files_;
  std::vector<std::unique_ptr<TypeSymbol>> types_;
  std::map<std::string, TypeSymbol*, std::less<>> by_name_;
  std::map<const TypeDecl*, TypeSymbol*> by_decl_;
  std::vector<Diagnostic> diagnostics_;
};

// Two passes over all compilation units: register every type and member
// project-wide, then resolve supertypes and member static types. Duplicate
// types in one package produce a diagnostic; the first one (in uri order)
// wins. `units` must outlive the table.
SymbolTable build_symbol_table(std::span<const CompilationUnit> units);

}  // namespace scg::extract
