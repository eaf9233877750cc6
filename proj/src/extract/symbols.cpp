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

#include "scg/extract/symbols.hpp"

#include <algorithm>
#include <numeric>

namespace scg::extract {
namespace {

NodeKind node_kind(TypeDeclKind kind) {
  switch (kind) {
    case TypeDeclKind::Class: return NodeKind::CLASS;
    case TypeDeclKind::Interface: return NodeKind::INTERFACE;
    case TypeDeclKind::Enum: return NodeKind::ENUM;
  }
  return NodeKind::CLASS;
}

std::vector<TypeParamSymbol> make_type_params(const StableSymbolId& owner,
                                              const std::vector<TypeParamDecl>& decls) {
  std::vector<TypeParamSymbol> out;
  for (const auto& tp : decls) {
    out.push_back({tp.name, make_stable_id(owner, tp.name, NodeKind::TYPE_PARAM), &tp});
  }
  return out;
}

const TypeParamSymbol* find_param(const std::vector<TypeParamSymbol>& params,
                                  std::string_view name) {
  for (const auto& p : params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

// Depth-first walk over a type and its project-local supertypes, the type
// itself first, superclass before interfaces. Stops when `visit` returns true.
template <typename Visit>
bool walk_hierarchy(const TypeSymbol& start, Visit&& visit) {
  std::vector<const TypeSymbol*> seen;
  std::vector<const TypeSymbol*> stack{&start};
  while (!stack.empty()) {
    const TypeSymbol* t = stack.back();
    stack.pop_back();
    if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
    seen.push_back(t);
    if (visit(*t)) return true;
    for (auto it = t->supertypes.rbegin(); it != t->supertypes.rend(); ++it) stack.push_back(*it);
  }
  return false;
}

MethodMatch pick(const std::vector<MethodSymbol>& candidates, std::size_t argc) {
  const MethodSymbol* exact = nullptr;
  const MethodSymbol* variadic = nullptr;
  std::size_t exact_count = 0, variadic_count = 0;
  for (const auto& m : candidates) {
    if (!m.varargs && m.arity == argc) {
      if (!exact) exact = &m;
      ++exact_count;
    } else if (m.accepts(argc)) {
      if (!variadic) variadic = &m;
      ++variadic_count;
    }
  }
  // Candidates are stored in overload-index order, so the first hit is the
  // lowest index.
  if (exact) return {exact, exact_count > 1};
  if (variadic) return {variadic, variadic_count > 1};
  return {};
}

}  // namespace

StableSymbolId disambiguated_id(std::string_view owner, std::string_view name, std::size_t n) {
  return make_stable_id(owner, name, SymbolKind::METHOD, n);
}

const TypeSymbol* SymbolTable::find_type(std::string_view qualified_name) const {
  auto it = by_name_.find(qualified_name);
  return it == by_name_.end() ? nullptr : it->second;
}

const FileScope* SymbolTable::file(std::string_view uri) const {
  for (const auto& f : files_) {
    if (f->uri == uri) return f.get();
  }
  return nullptr;
}

const TypeSymbol* SymbolTable::symbol_for(const TypeDecl* decl) const {
  auto it = by_decl_.find(decl);
  return it == by_decl_.end() ? nullptr : it->second;
}

MethodMatch SymbolTable::lookup_method(const TypeSymbol& type, std::string_view name,
                                       std::size_t argc) const {
  MethodMatch found;
  walk_hierarchy(type, [&](const TypeSymbol& t) {
    auto it = t.methods.find(name);
    if (it == t.methods.end()) return false;
    found = pick(it->second, argc);
    return found.method != nullptr;
  });
  return found;
}

MethodMatch SymbolTable::lookup_constructor(const TypeSymbol& type, std::size_t argc) const {
  return pick(type.constructors, argc);
}

const FieldSymbol* SymbolTable::lookup_field(const TypeSymbol& type, std::string_view name) const {
  const FieldSymbol* found = nullptr;
  walk_hierarchy(type, [&](const TypeSymbol& t) {
    auto it = t.field_index.find(name);
    if (it == t.field_index.end()) return false;
    found = &t.field_list[it->second];
    return true;
  });
  return found;
}

const TypeSymbol* SymbolTable::lookup_member_type(const TypeSymbol& type,
                                                  std::string_view name) const {
  const TypeSymbol* found = nullptr;
  walk_hierarchy(type, [&](const TypeSymbol& t) {
    auto it = t.nested.find(name);
    if (it == t.nested.end()) return false;
    found = it->second;
    return true;
  });
  return found;
}

bool SymbolTable::has_external_ancestry(const TypeSymbol& type) const {
  return walk_hierarchy(type, [](const TypeSymbol& t) { return t.external_supertype; });
}

SymbolTable::Resolved SymbolTable::resolve_simple_type(std::string_view name,
                                                       const FileScope& file,
                                                       const TypeSymbol* context,
                                                       const MethodSymbol* method) const {
  if (method) {
    if (auto* p = find_param(method->type_params, name)) return {nullptr, p};
  }
  for (const TypeSymbol* t = context; t; t = t->outer) {
    if (auto* p = find_param(t->type_params, name)) return {nullptr, p};
    if (auto* m = lookup_member_type(*t, name)) return {m, nullptr};
    if (!t->outer && t->name == name) return {t, nullptr};
  }
  if (auto it = file.top_level.find(name); it != file.top_level.end()) return {it->second, nullptr};
  if (auto it = file.single_imports.find(name); it != file.single_imports.end()) {
    return {find_type(it->second), nullptr};
  }
  std::string same_package = file.package.empty() ? std::string(name)
                                                  : file.package + "." + std::string(name);
  if (auto* t = find_type(same_package)) return {t, nullptr};
  for (const auto& prefix : file.on_demand_imports) {
    if (auto* t = find_type(prefix + "." + std::string(name))) return {t, nullptr};
  }
  return {};
}

SymbolTable::Resolved SymbolTable::resolve_type(const TypeRef& ref, const FileScope& file,
                                                const TypeSymbol* context,
                                                const MethodSymbol* method) const {
  if (ref.primitive || ref.wildcard || ref.is_var || ref.names.empty()) return {};
  Resolved head = resolve_simple_type(ref.names[0], file, context, method);
  if (ref.names.size() == 1) return head;
  std::size_t next = 1;
  const TypeSymbol* t = head.type;
  if (!t) {
    if (head.type_param) return {};
    // Not a type: accumulate package segments until a type appears.
    std::string qualified = ref.names[0];
    for (; next < ref.names.size() && !t; ++next) {
      qualified += "." + ref.names[next];
      t = find_type(qualified);
    }
    if (!t) return {};
  }
  for (; next < ref.names.size() && t; ++next) t = lookup_member_type(*t, ref.names[next]);
  return {t, nullptr};
}

StaticType SymbolTable::static_type(const TypeRef& ref, const FileScope& file,
                                    const TypeSymbol* context, const MethodSymbol* method) const {
  return {resolve_type(ref, file, context, method).type, ref.dims};
}

SymbolTable build_symbol_table(std::span<const CompilationUnit> units) {
  SymbolTable table;
  std::vector<std::size_t> order(units.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return units[a].uri < units[b].uri; });

  // Pass 1: types and members.
  auto register_type = [&](auto& self, const TypeDecl& decl, FileScope& file,
                           TypeSymbol* outer) -> void {
    std::string qualified = outer ? outer->qualified_name + "." + decl.name
                            : file.package.empty() ? decl.name
                                                   : file.package + "." + decl.name;
    if (auto it = table.by_name_.find(qualified); it != table.by_name_.end()) {
      table.diagnostics_.push_back(
          {Severity::Error, file.uri, decl.name_span.start_line, decl.name_span.start_column,
           "duplicate type " + qualified + ", first declared in " + it->second->file->uri +
               "; declaration ignored"});
      return;
    }
    auto owned = std::make_unique<TypeSymbol>();
    TypeSymbol& sym = *owned;
    sym.name = decl.name;
    sym.qualified_name = qualified;
    sym.package = file.package;
    sym.kind = node_kind(decl.kind);
    sym.id = make_stable_id(outer ? outer->id : package_id(file.package), decl.name, sym.kind);
    sym.decl = &decl;
    sym.file = &file;
    sym.outer = outer;
    sym.type_params = make_type_params(sym.id, decl.type_params);
    sym.external_supertype = decl.kind == TypeDeclKind::Enum;
    table.by_name_[qualified] = &sym;
    table.by_decl_[&decl] = &sym;
    if (outer) {
      outer->nested[decl.name] = &sym;
    } else {
      file.top_level[decl.name] = &sym;
    }
    table.types_.push_back(std::move(owned));

    std::set<StableSymbolId> used;
    std::map<std::string, std::size_t> overloads;
    std::size_t ctor_count = 0;
    for (const auto& m : decl.methods) {
      MethodSymbol ms;
      ms.is_constructor = m.is_constructor;
      ms.name = m.is_constructor ? std::string(kConstructorName) : m.name;
      ms.overload_index = m.is_constructor ? ctor_count++ : overloads[m.name]++;
      ms.id = make_stable_id(sym.id, ms.name,
                             m.is_constructor ? NodeKind::CONSTRUCTOR : NodeKind::METHOD,
                             ms.overload_index);
      ms.is_static = m.modifiers.is_static;
      ms.is_private = m.modifiers.is_private;
      ms.arity = m.params.size();
      ms.varargs = !m.params.empty() && m.params.back().varargs;
      ms.owner = &sym;
      ms.decl = &m;
      ms.type_params = make_type_params(ms.id, m.type_params);
      used.insert(ms.id);
      if (m.is_constructor) {
        sym.constructors.push_back(std::move(ms));
      } else {
        sym.methods[m.name].push_back(std::move(ms));
      }
    }
    auto add_field = [&](FieldSymbol f) {
      StableSymbolId id = make_stable_id(sym.id, f.name, f.kind);
      for (std::size_t n = 1; used.count(id); ++n) id = disambiguated_id(sym.id, f.name, n);
      used.insert(id);
      f.id = std::move(id);
      f.owner = &sym;
      sym.field_index.emplace(f.name, sym.field_list.size());
      sym.field_list.push_back(std::move(f));
    };
    for (const auto& c : decl.constants) {
      FieldSymbol f;
      f.name = c.name;
      f.kind = NodeKind::VALUE;
      f.constant = &c;
      add_field(std::move(f));
    }
    for (const auto& v : decl.fields) {
      FieldSymbol f;
      f.name = v.name;
      f.kind = (v.is_final || decl.kind == TypeDeclKind::Interface) ? NodeKind::VALUE
                                                                    : NodeKind::VARIABLE;
      f.decl = &v;
      add_field(std::move(f));
    }
    for (const auto& n : decl.nested) self(self, n, file, &sym);
  };

  for (std::size_t i : order) {
    const CompilationUnit& unit = units[i];
    auto scope = std::make_unique<FileScope>();
    scope->uri = unit.uri;
    scope->package = unit.package;
    scope->unit = &unit;
    for (const auto& imp : unit.imports) {
      if (imp.on_demand) {
        scope->on_demand_imports.push_back(imp.name);
      } else {
        auto dot = imp.name.rfind('.');
        scope->single_imports[dot == std::string::npos ? imp.name : imp.name.substr(dot + 1)] =
            imp.name;
      }
    }
    for (const auto& decl : unit.types) register_type(register_type, decl, *scope, nullptr);
    table.files_.push_back(std::move(scope));
  }

  for (auto& t : table.types_) {
    for (auto& [name, overloads] : t->methods) {
      for (auto& m : overloads) t->method_by_decl[m.decl] = &m;
    }
    for (auto& c : t->constructors) t->method_by_decl[c.decl] = &c;
  }

  // Pass 2: supertypes. Repeated so member types inherited through a type
  // resolved later in the first round are found in the second.
  for (int round = 0; round < 2; ++round) {
    for (auto& owned : table.types_) {
      TypeSymbol& t = *owned;
      const TypeDecl& d = *t.decl;
      t.supertypes.clear();
      t.declared_supertypes.clear();
      t.superclass = nullptr;
      t.external_supertype = d.kind == TypeDeclKind::Enum;
      auto resolve = [&](const TypeRef& ref) -> const TypeSymbol* {
        if (ref.names.size() == 1 && find_param(t.type_params, ref.names[0])) return nullptr;
        // Resolved from the enclosing scope: a type's own members are not
        // visible in its extends clause.
        const TypeSymbol* s = table.resolve_type(ref, *t.file, t.outer).type;
        return s == &t ? nullptr : s;
      };
      auto add = [&](const TypeRef& ref, bool is_class) {
        const TypeSymbol* s = resolve(ref);
        t.declared_supertypes.push_back({&ref, s});
        if (!s) {
          t.external_supertype = true;
          return;
        }
        if (is_class) t.superclass = s;
        if (std::find(t.supertypes.begin(), t.supertypes.end(), s) == t.supertypes.end()) {
          t.supertypes.push_back(s);
        }
      };
      for (const auto& ref : d.extends) add(ref, d.kind == TypeDeclKind::Class);
      for (const auto& ref : d.implements) add(ref, false);
    }
  }

  // Pass 3: static types of members.
  for (auto& owned : table.types_) {
    TypeSymbol& t = *owned;
    for (auto& f : t.field_list) {
      f.type = f.constant ? StaticType{&t, 0} : table.static_type(f.decl->type, *t.file, &t);
    }
    for (auto& [name, overloads] : t.methods) {
      for (auto& m : overloads) {
        if (m.decl->return_type) m.return_type = table.static_type(*m.decl->return_type, *t.file, &t, &m);
      }
    }
  }
  return table;
}

}  // namespace scg::extract
