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

#include "scg/extract/extractor.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <iterator>
#include <tuple>

#include "scg/extract/parser.hpp"
#include "scg/extract/symbols.hpp"
#include "scg/stable_id.hpp"

namespace fs = std::filesystem;

namespace scg::extract {
namespace {

// java.lang.Object members every class inherits; calling them unqualified is
// never reported as unresolved.
constexpr std::array<std::string_view, 9> kObjectMethods = {
    "equals", "hashCode", "toString", "getClass", "notify", "notifyAll", "wait", "clone",
    "finalize"};

std::string basename(const std::string& uri) {
  auto slash = uri.rfind('/');
  return slash == std::string::npos ? uri : uri.substr(slash + 1);
}

struct Local {
  StableSymbolId id;
  StaticType type;
};

struct Context {
  const TypeSymbol* type = nullptr;
  const MethodSymbol* method = nullptr;
  StableSymbolId owner;   // owner of locals declared here
  StableSymbolId source;  // source of CALL edges
  std::vector<std::map<std::string, Local, std::less<>>> scopes;
};

struct ExprInfo {
  enum class Cat { None, Value, Type, Package } cat = Cat::None;
  StaticType type;
  std::string package;
  bool is_super = false;

  static ExprInfo value(StaticType t = {}) { return {Cat::Value, t, {}, false}; }
};

class FileEmitter {
 public:
  FileEmitter(const SymbolTable& table, const FileScope& file, std::vector<Diagnostic>& diags)
      : table_(table), file_(file), diags_(diags) {}

  SemanticGraphFile run() {
    for (const auto& decl : file_.unit->types) emit_type(decl);
    std::stable_sort(nodes_.begin(), nodes_.end(), [](const GraphNode& a, const GraphNode& b) {
      auto key = [](const GraphNode& n) {
        return std::tuple(n.location->startLine, n.location->startCharacter);
      };
      if (key(a) != key(b)) return key(a) < key(b);
      return a.id < b.id;
    });
    return SemanticGraphFile{file_.uri, std::move(nodes_)};
  }

 private:
  // ---- output ----

  void add_node(const StableSymbolId& id, NodeKind kind, const std::string& display,
                const Span& span, std::optional<bool> is_local = std::nullopt) {
    GraphNode node;
    node.id = id;
    node.kind = std::string(to_string(kind));
    node.location = to_location(file_.uri, span);
    node.displayName = display;
    node.properties[std::string(prop::kLoc)] = std::to_string(span.end_line - span.start_line + 1);
    node.properties[std::string(prop::kPackage)] = file_.package;
    node.properties[std::string(prop::kFile)] = basename(file_.uri);
    if (is_local) node.properties[std::string(prop::kIsLocal)] = *is_local ? "true" : "false";
    index_[id] = nodes_.size();
    nodes_.push_back(std::move(node));
  }

  void add_edge(const StableSymbolId& from, const StableSymbolId& to, EdgeType type,
                const Span& at) {
    auto it = index_.find(from);
    if (it == index_.end()) return;
    Edge e;
    e.to = to;
    e.type = std::string(to_string(type));
    e.location = to_location(file_.uri, at);
    nodes_[it->second].edges.push_back(std::move(e));
  }

  void warn(const Span& at, std::string message) {
    diags_.push_back({Severity::Warning, file_.uri, at.start_line, at.start_column,
                      std::move(message)});
  }

  // TYPE or RETURN_TYPE edges to every project-local type named in `ref`,
  // type arguments included. EXTEND edges of bounds stop at the head type.
  void emit_type_refs(const StableSymbolId& from, const TypeRef& ref, EdgeType type,
                      const TypeSymbol* context, const MethodSymbol* method) {
    if (ref.primitive || ref.is_var) return;
    if (!ref.wildcard) {
      auto r = table_.resolve_type(ref, file_, context, method);
      if (r.type) {
        add_edge(from, r.type->id, type, ref.name_spans.back());
      } else if (r.type_param) {
        add_edge(from, r.type_param->id, type, ref.name_spans.back());
      }
    }
    if (type == EdgeType::EXTEND) return;
    for (const auto& arg : ref.args) emit_type_refs(from, arg, type, context, method);
  }

  void emit_type_params(const StableSymbolId& owner, const std::vector<TypeParamSymbol>& params,
                        const TypeSymbol* context, const MethodSymbol* method) {
    for (const auto& tp : params) {
      add_node(tp.id, NodeKind::TYPE_PARAM, tp.name, tp.decl->decl_span);
      add_edge(owner, tp.id, EdgeType::TYPE_PARAMETER, tp.decl->name_span);
      for (const auto& bound : tp.decl->bounds) {
        emit_type_refs(tp.id, bound, EdgeType::EXTEND, context, method);
      }
    }
  }

  // ---- declarations ----

  void emit_type(const TypeDecl& decl) {
    const TypeSymbol* sym = table_.symbol_for(&decl);
    if (!sym) return;
    add_node(sym->id, sym->kind, decl.name, decl.decl_span);
    if (sym->outer) add_edge(sym->outer->id, sym->id, EdgeType::DECLARATION, decl.name_span);
    emit_type_params(sym->id, sym->type_params, sym, nullptr);
    for (const auto& st : sym->declared_supertypes) {
      if (st.type) add_edge(sym->id, st.type->id, EdgeType::EXTEND, st.ref->name_spans.back());
    }

    for (const auto& f : sym->field_list) {
      if (f.constant) {
        add_node(f.id, NodeKind::VALUE, f.name, f.constant->decl_span, false);
        add_edge(sym->id, f.id, EdgeType::DECLARATION, f.constant->name_span);
        add_edge(f.id, sym->id, EdgeType::TYPE, f.constant->name_span);
        Context ctx = member_context(sym, nullptr, sym->id, f.id);
        auto ctor = table_.lookup_constructor(*sym, f.constant->args.size());
        if (ctor.method) add_edge(f.id, ctor.method->id, EdgeType::CALL, f.constant->name_span);
        for (const auto& arg : f.constant->args) resolve(ctx, arg);
      } else {
        add_node(f.id, f.kind, f.name, f.decl->decl_span, false);
        add_edge(sym->id, f.id, EdgeType::DECLARATION, f.decl->name_span);
        emit_type_refs(f.id, f.decl->type, EdgeType::TYPE, sym, nullptr);
        if (f.decl->init) {
          Context ctx = member_context(sym, nullptr, sym->id, f.id);
          resolve(ctx, *f.decl->init);
        }
      }
    }

    for (const auto& m : decl.methods) emit_method(*sym, *sym->method_by_decl.at(&m));

    for (const auto& init : decl.initializers) {
      Context ctx = member_context(sym, nullptr, sym->id, sym->id);
      visit(ctx, init.body);
    }
    for (const auto& nested : decl.nested) emit_type(nested);
  }

  Context member_context(const TypeSymbol* type, const MethodSymbol* method,
                         const StableSymbolId& owner, const StableSymbolId& source) {
    Context ctx;
    ctx.type = type;
    ctx.method = method;
    ctx.owner = owner;
    ctx.source = source;
    ctx.scopes.emplace_back();
    return ctx;
  }

  void emit_method(const TypeSymbol& type, const MethodSymbol& m) {
    const MethodDecl& d = *m.decl;
    add_node(m.id, m.is_constructor ? NodeKind::CONSTRUCTOR : NodeKind::METHOD,
             m.is_constructor ? type.name : d.name, d.decl_span);
    add_edge(type.id, m.id, EdgeType::DECLARATION, d.name_span);
    emit_type_params(m.id, m.type_params, &type, &m);

    Context ctx = member_context(&type, &m, m.id, m.id);
    for (const auto& p : d.params) {
      StableSymbolId pid = make_stable_id(m.id, p.name, NodeKind::PARAM);
      add_node(pid, NodeKind::PARAM, p.name, p.decl_span);
      add_edge(m.id, pid, EdgeType::PARAMETER, p.name_span);
      emit_type_refs(pid, p.type, EdgeType::TYPE, &type, &m);
      ctx.scopes.back()[p.name] = Local{pid, table_.static_type(p.type, file_, &type, &m)};
    }
    if (d.return_type) emit_type_refs(m.id, *d.return_type, EdgeType::RETURN_TYPE, &type, &m);
    if (!m.is_constructor && !m.is_static && !m.is_private) emit_overrides(type, m);
    if (d.body) visit(ctx, *d.body);
  }

  // OVERRIDE edges to the nearest same-name, same-arity declaration along
  // each project-local supertype branch.
  void emit_overrides(const TypeSymbol& type, const MethodSymbol& m) {
    std::vector<StableSymbolId> targets;
    std::vector<const TypeSymbol*> seen;
    auto search = [&](auto& self, const TypeSymbol& t) -> void {
      if (std::find(seen.begin(), seen.end(), &t) != seen.end()) return;
      seen.push_back(&t);
      if (auto it = t.methods.find(m.decl->name); it != t.methods.end()) {
        for (const auto& candidate : it->second) {
          if (candidate.arity == m.arity && !candidate.is_static && !candidate.is_private) {
            if (std::find(targets.begin(), targets.end(), candidate.id) == targets.end()) {
              targets.push_back(candidate.id);
            }
            return;
          }
        }
      }
      for (const TypeSymbol* s : t.supertypes) self(self, *s);
    };
    for (const TypeSymbol* s : type.supertypes) search(search, *s);
    for (const auto& target : targets) {
      add_edge(m.id, target, EdgeType::OVERRIDE, m.decl->name_span);
    }
  }

  // ---- statements ----

  StableSymbolId unique_local_id(const StableSymbolId& owner, const std::string& name,
                                 NodeKind kind) {
    StableSymbolId id = make_stable_id(owner, name, kind);
    for (std::size_t n = 1; index_.count(id); ++n) id = disambiguated_id(owner, name, n);
    return id;
  }

  void declare_local(Context& ctx, const VarDecl& v, std::optional<StaticType> element = {}) {
    NodeKind kind = v.is_final ? NodeKind::VALUE : NodeKind::VARIABLE;
    StableSymbolId id = unique_local_id(ctx.owner, v.name, kind);
    add_node(id, kind, v.name, v.decl_span, true);
    add_edge(ctx.owner, id, EdgeType::DECLARATION, v.name_span);
    emit_type_refs(id, v.type, EdgeType::TYPE, ctx.type, ctx.method);
    StaticType type = table_.static_type(v.type, file_, ctx.type, ctx.method);
    if (v.init) {
      StableSymbolId saved = ctx.source;
      ctx.source = id;
      ExprInfo init = resolve(ctx, *v.init);
      ctx.source = saved;
      if (v.type.is_var) type = init.type;
    } else if (v.type.is_var && element) {
      type = *element;
    }
    ctx.scopes.back()[v.name] = Local{id, type};
  }

  void visit(Context& ctx, const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Block:
        ctx.scopes.emplace_back();
        for (const auto& c : s.children) visit(ctx, c);
        ctx.scopes.pop_back();
        break;
      case StmtKind::LocalVars:
        for (const auto& v : s.vars) declare_local(ctx, v);
        break;
      case StmtKind::Simple:
        for (const auto& e : s.exprs) resolve(ctx, e);
        break;
      case StmtKind::Control:
        for (const auto& e : s.exprs) resolve(ctx, e);
        for (const auto& c : s.children) visit(ctx, c);
        break;
      case StmtKind::For:
        ctx.scopes.emplace_back();
        for (const auto& v : s.vars) declare_local(ctx, v);
        for (const auto& e : s.exprs) resolve(ctx, e);
        for (const auto& c : s.children) visit(ctx, c);
        ctx.scopes.pop_back();
        break;
      case StmtKind::ForEach: {
        ctx.scopes.emplace_back();
        ExprInfo iterable = resolve(ctx, s.exprs.at(0));
        StaticType element;
        if (iterable.type.dims > 0) element = {iterable.type.type, iterable.type.dims - 1};
        declare_local(ctx, s.vars.at(0), element);
        for (const auto& c : s.children) visit(ctx, c);
        ctx.scopes.pop_back();
        break;
      }
      case StmtKind::Try:
        ctx.scopes.emplace_back();
        for (const auto& v : s.vars) declare_local(ctx, v);
        for (const auto& e : s.exprs) resolve(ctx, e);
        if (!s.children.empty()) visit(ctx, s.children[0]);
        ctx.scopes.pop_back();
        for (std::size_t i = 1; i < s.children.size(); ++i) visit(ctx, s.children[i]);
        break;
      case StmtKind::Catch:
        ctx.scopes.emplace_back();
        for (const auto& v : s.vars) declare_local(ctx, v);
        for (const auto& c : s.children) visit(ctx, c);
        ctx.scopes.pop_back();
        break;
      case StmtKind::Switch: {
        ExprInfo selector = resolve(ctx, s.exprs.at(0));
        ctx.scopes.emplace_back();
        for (const auto& group : s.children) {
          for (const auto& label : group.exprs) resolve_case_label(ctx, label, selector);
          for (const auto& c : group.children) visit(ctx, c);
        }
        ctx.scopes.pop_back();
        break;
      }
      case StmtKind::CaseGroup:
        for (const auto& c : s.children) visit(ctx, c);
        break;
      case StmtKind::Skipped:
        break;
    }
  }

  void resolve_case_label(Context& ctx, const Expr& label, const ExprInfo& selector) {
    // Enum labels are bare constant names of the selector's type.
    if (label.kind == ExprKind::Name && selector.type.type && selector.type.dims == 0) {
      if (const FieldSymbol* f = table_.lookup_field(*selector.type.type, label.name)) {
        add_edge(ctx.source, f->id, EdgeType::CALL, label.name_span);
        return;
      }
      if (selector.type.type->kind == NodeKind::ENUM) return;
    }
    if (label.kind == ExprKind::Name && !selector.type.type) {
      // Unknown selector type: resolve quietly, the label may be a constant
      // of an external enum.
      resolve(ctx, label, true);
      return;
    }
    resolve(ctx, label);
  }

  // ---- expressions ----

  const Local* find_local(const Context& ctx, std::string_view name) const {
    for (auto it = ctx.scopes.rbegin(); it != ctx.scopes.rend(); ++it) {
      if (auto found = it->find(name); found != it->end()) return &found->second;
    }
    return nullptr;
  }

  bool open_world(const Context& ctx) const {
    for (const TypeSymbol* t = ctx.type; t; t = t->outer) {
      if (table_.has_external_ancestry(*t)) return true;
    }
    return false;
  }

  void report_ambiguity(const Span& at, const std::string& name, std::size_t argc) {
    warn(at, "ambiguous call " + name + " with " + std::to_string(argc) +
                 " argument(s), lowest overload chosen");
  }

  ExprInfo resolve_name(Context& ctx, const Expr& e, bool qualifier) {
    if (const Local* l = find_local(ctx, e.name)) {
      add_edge(ctx.source, l->id, EdgeType::CALL, e.name_span);
      return ExprInfo::value(l->type);
    }
    for (const TypeSymbol* t = ctx.type; t; t = t->outer) {
      if (const FieldSymbol* f = table_.lookup_field(*t, e.name)) {
        add_edge(ctx.source, f->id, EdgeType::CALL, e.name_span);
        return ExprInfo::value(f->type);
      }
    }
    auto r = table_.resolve_simple_type(e.name, file_, ctx.type, ctx.method);
    if (r.type) return {ExprInfo::Cat::Type, {r.type, 0}, {}, false};
    if (r.type_param) return {};
    if (!qualifier) {
      if (!open_world(ctx)) warn(e.name_span, "unresolved name '" + e.name + "'");
      return ExprInfo::value();
    }
    return {ExprInfo::Cat::Package, {}, e.name, false};
  }

  ExprInfo resolve_field_access(Context& ctx, const Expr& e) {
    ExprInfo recv = resolve(ctx, e.operands.at(0), true);
    switch (recv.cat) {
      case ExprInfo::Cat::Value:
        if (recv.type.type && recv.type.dims == 0) {
          if (const FieldSymbol* f = table_.lookup_field(*recv.type.type, e.name)) {
            add_edge(ctx.source, f->id, EdgeType::CALL, e.name_span);
            return ExprInfo::value(f->type);
          }
        }
        return ExprInfo::value();
      case ExprInfo::Cat::Type:
        if (const FieldSymbol* f = table_.lookup_field(*recv.type.type, e.name)) {
          add_edge(ctx.source, f->id, EdgeType::CALL, e.name_span);
          return ExprInfo::value(f->type);
        }
        if (const TypeSymbol* nested = table_.lookup_member_type(*recv.type.type, e.name)) {
          return {ExprInfo::Cat::Type, {nested, 0}, {}, false};
        }
        return ExprInfo::value();
      case ExprInfo::Cat::Package: {
        std::string qualified = recv.package + "." + e.name;
        if (const TypeSymbol* t = table_.find_type(qualified)) {
          return {ExprInfo::Cat::Type, {t, 0}, {}, false};
        }
        return {ExprInfo::Cat::Package, {}, qualified, false};
      }
      case ExprInfo::Cat::None:
        break;
    }
    return ExprInfo::value();
  }

  ExprInfo resolve_call(Context& ctx, const Expr& e) {
    std::size_t first_arg = e.has_receiver ? 1 : 0;
    std::size_t argc = e.operands.size() - first_arg;
    MethodMatch match;
    if (e.has_receiver) {
      ExprInfo recv = resolve(ctx, e.operands.at(0), true);
      const TypeSymbol* target = nullptr;
      if ((recv.cat == ExprInfo::Cat::Value || recv.cat == ExprInfo::Cat::Type) &&
          recv.type.dims == 0) {
        target = recv.type.type;
      }
      if (target) match = table_.lookup_method(*target, e.name, argc);
    } else {
      for (const TypeSymbol* t = ctx.type; t && !match.method; t = t->outer) {
        match = table_.lookup_method(*t, e.name, argc);
      }
      if (!match.method && !open_world(ctx) &&
          std::find(kObjectMethods.begin(), kObjectMethods.end(), e.name) == kObjectMethods.end()) {
        warn(e.name_span, "unresolved method '" + e.name + "' with " + std::to_string(argc) +
                              " argument(s)");
      }
    }
    if (match.method) {
      add_edge(ctx.source, match.method->id, EdgeType::CALL, e.name_span);
      if (match.ambiguous) report_ambiguity(e.name_span, e.name, argc);
    }
    for (std::size_t i = first_arg; i < e.operands.size(); ++i) resolve(ctx, e.operands[i]);
    return ExprInfo::value(match.method ? match.method->return_type : StaticType{});
  }

  ExprInfo resolve_new(Context& ctx, const Expr& e) {
    const TypeRef& ref = *e.type;
    const TypeSymbol* t = table_.resolve_type(ref, file_, ctx.type, ctx.method).type;
    if (t) {
      std::size_t argc = e.operands.size();
      if (t->constructors.empty()) {
        add_edge(ctx.source, t->id, EdgeType::CALL, ref.name_spans.back());
      } else {
        MethodMatch match = table_.lookup_constructor(*t, argc);
        if (match.method) {
          add_edge(ctx.source, match.method->id, EdgeType::CALL, ref.name_spans.back());
          if (match.ambiguous) report_ambiguity(ref.name_spans.back(), t->name, argc);
        } else {
          warn(ref.name_spans.back(), "no constructor of " + t->name + " takes " +
                                          std::to_string(argc) + " argument(s)");
        }
      }
    }
    for (const auto& arg : e.operands) resolve(ctx, arg);
    return ExprInfo::value({t, 0});
  }

  ExprInfo resolve(Context& ctx, const Expr& e, bool qualifier = false) {
    switch (e.kind) {
      case ExprKind::Literal:
      case ExprKind::ClassLiteral:
        return ExprInfo::value();
      case ExprKind::Name:
        return resolve_name(ctx, e, qualifier);
      case ExprKind::FieldAccess:
        return resolve_field_access(ctx, e);
      case ExprKind::Call:
        return resolve_call(ctx, e);
      case ExprKind::ConstructorCall: {
        const TypeSymbol* t = e.name == "this" ? ctx.type : (ctx.type ? ctx.type->superclass : nullptr);
        if (t) {
          MethodMatch match = table_.lookup_constructor(*t, e.operands.size());
          if (match.method) add_edge(ctx.source, match.method->id, EdgeType::CALL, e.name_span);
        }
        for (const auto& arg : e.operands) resolve(ctx, arg);
        return ExprInfo::value();
      }
      case ExprKind::New:
        return resolve_new(ctx, e);
      case ExprKind::NewArray: {
        const TypeSymbol* t = table_.resolve_type(*e.type, file_, ctx.type, ctx.method).type;
        for (const auto& op : e.operands) resolve(ctx, op);
        return ExprInfo::value({t, e.type->dims});
      }
      case ExprKind::This: {
        const TypeSymbol* t = ctx.type;
        if (e.type) t = table_.resolve_type(*e.type, file_, ctx.type, ctx.method).type;
        return ExprInfo::value({t, 0});
      }
      case ExprKind::Super: {
        ExprInfo info = ExprInfo::value({ctx.type ? ctx.type->superclass : nullptr, 0});
        info.is_super = true;
        return info;
      }
      case ExprKind::Assign: {
        ExprInfo lhs = resolve(ctx, e.operands.at(0));
        resolve(ctx, e.operands.at(1));
        return ExprInfo::value(lhs.type);
      }
      case ExprKind::Conditional: {
        resolve(ctx, e.operands.at(0));
        ExprInfo a = resolve(ctx, e.operands.at(1));
        ExprInfo b = resolve(ctx, e.operands.at(2));
        return ExprInfo::value(a.type.type ? a.type : b.type);
      }
      case ExprKind::Cast: {
        resolve(ctx, e.operands.at(0));
        return ExprInfo::value(table_.static_type(*e.type, file_, ctx.type, ctx.method));
      }
      case ExprKind::ArrayAccess: {
        ExprInfo array = resolve(ctx, e.operands.at(0));
        resolve(ctx, e.operands.at(1));
        if (array.type.dims > 0) return ExprInfo::value({array.type.type, array.type.dims - 1});
        return ExprInfo::value();
      }
      case ExprKind::Skipped:
        for (const auto& op : e.operands) resolve(ctx, op, true);
        return ExprInfo::value();
      case ExprKind::ArrayInit:
      case ExprKind::Unary:
      case ExprKind::Binary:
      case ExprKind::InstanceOf:
        for (const auto& op : e.operands) resolve(ctx, op);
        return ExprInfo::value();
    }
    return ExprInfo::value();
  }

  const SymbolTable& table_;
  const FileScope& file_;
  std::vector<Diagnostic>& diags_;
  std::vector<GraphNode> nodes_;
  std::map<StableSymbolId, std::size_t, std::less<>> index_;
};

bool diag_less(const Diagnostic& a, const Diagnostic& b) {
  return std::tie(a.uri, a.line, a.column) < std::tie(b.uri, b.line, b.column);
}

}  // namespace

ExtractResult extract_sources(std::vector<SourceFile> sources) {
  std::stable_sort(sources.begin(), sources.end(),
                   [](const SourceFile& a, const SourceFile& b) { return a.uri < b.uri; });
  ExtractResult result;
  std::vector<CompilationUnit> units;
  units.reserve(sources.size());
  for (const auto& src : sources) {
    ParseResult parsed = parse_source(src.text, src.uri);
    for (auto& d : parsed.diagnostics) result.diagnostics.push_back(std::move(d));
    if (parsed.fatal) {
      result.fatal.push_back(std::move(*parsed.fatal));
      continue;
    }
    units.push_back(std::move(parsed.unit));
  }

  SymbolTable table = build_symbol_table(units);
  for (const auto& d : table.diagnostics()) result.diagnostics.push_back(d);
  for (const auto& scope : table.files()) {
    FileEmitter emitter(table, *scope, result.diagnostics);
    result.files.push_back(emitter.run());
  }
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(), diag_less);
  return result;
}

ExtractResult extract(const fs::path& project_root) {
  std::error_code ec;
  if (!fs::is_directory(project_root, ec)) {
    throw ExtractError("not a readable directory: " + project_root.string());
  }
  std::vector<fs::path> paths;
  fs::recursive_directory_iterator it(project_root, fs::directory_options::skip_permission_denied,
                                      ec);
  if (ec) throw ExtractError("cannot read " + project_root.string() + ": " + ec.message());
  for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) throw ExtractError("cannot scan " + project_root.string() + ": " + ec.message());
    const fs::path& p = it->path();
    if (it->is_directory(ec) && p.filename().string().starts_with(".")) {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file(ec) && p.extension() == ".java") paths.push_back(p);
  }
  std::sort(paths.begin(), paths.end());

  std::vector<SourceFile> sources;
  std::vector<Diagnostic> unreadable;
  for (const auto& p : paths) {
    std::string uri = fs::relative(p, project_root).generic_string();
    std::ifstream in(p, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!in && !in.eof()) {
      unreadable.push_back({Severity::Error, uri, 0, 0, "cannot read file"});
      continue;
    }
    sources.push_back({std::move(uri), std::move(text)});
  }
  ExtractResult result = extract_sources(std::move(sources));
  for (auto& d : unreadable) result.fatal.push_back(std::move(d));
  std::stable_sort(result.fatal.begin(), result.fatal.end(), diag_less);
  return result;
}

}  // namespace scg::extract
