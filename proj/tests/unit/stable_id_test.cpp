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

#include <random>
#include <set>

#include "doctest.h"
#include "scg/stable_id.hpp"

namespace scg {
namespace {

TEST_CASE("package and type ids") {
  CHECK(make_stable_id("", "p", SymbolKind::PACKAGE) == "p/");
  CHECK(make_stable_id("p/", "q", SymbolKind::PACKAGE) == "p/q/");
  CHECK(make_stable_id("p/", "A", SymbolKind::CLASS) == "p/A#");
  CHECK(make_stable_id("p/", "I", SymbolKind::INTERFACE) == "p/I#");
  CHECK(make_stable_id("p/", "E", SymbolKind::ENUM) == "p/E#");
  CHECK(make_stable_id("p/", "T", SymbolKind::TRAIT) == "p/T#");
  CHECK(make_stable_id("p/", "B", SymbolKind::OBJECT) == "p/B.");
  CHECK(make_stable_id("p/B.", "T", SymbolKind::TYPE) == "p/B.T#");
  CHECK(package_id("a.b") == "a/b/");
  CHECK(package_id("") == "");
}

TEST_CASE("member ids") {
  CHECK(make_stable_id("p/A#", "mA", SymbolKind::METHOD, 0) == "p/A#mA().");
  CHECK(make_stable_id("p/A#", "mA", NodeKind::METHOD) == "p/A#mA().");
  CHECK(make_stable_id("p/B.", "mB", SymbolKind::METHOD, 1) == "p/B.mB(+1).");
  CHECK(make_stable_id("p/A#mA().", "a", SymbolKind::PARAM) == "p/A#mA().(a)");
  CHECK(make_stable_id("p/A#mT().", "T2", SymbolKind::TYPE_PARAM) == "p/A#mT().[T2]");
  CHECK(make_stable_id("p/B.", "b", SymbolKind::VALUE) == "p/B.b.");
  CHECK(make_stable_id("p/B.", "c", SymbolKind::VARIABLE) == "p/B.c().");
}

TEST_CASE("constructors use the reserved name") {
  CHECK(make_stable_id("p/A#", kConstructorName, SymbolKind::CONSTRUCTOR) == "p/A#`<init>`().");
  CHECK(make_stable_id("p/A#", kConstructorName, SymbolKind::CONSTRUCTOR, 2) ==
        "p/A#`<init>`(+2).");
}

TEST_CASE("rejected names") {
  CHECK_THROWS_AS(make_stable_id("p/", "", SymbolKind::CLASS), StableIdError);
  CHECK_THROWS_AS(make_stable_id("p/", "a b", SymbolKind::CLASS), StableIdError);
  CHECK_THROWS_AS(make_stable_id("p/", "a#b", SymbolKind::CLASS), StableIdError);
  CHECK_THROWS_AS(make_stable_id("p/", "a/b", SymbolKind::CLASS), StableIdError);
  CHECK_THROWS_AS(make_stable_id("p/", "a\tb", SymbolKind::VALUE), StableIdError);
  CHECK_THROWS_AS(make_stable_id("p/A#", "x", SymbolKind::VALUE, 1), StableIdError);
  CHECK_THROWS_AS(make_stable_id("p/", "A", SymbolKind::CLASS, 0), StableIdError);
}

// Kinds that share a descriptor suffix produce the same id by design.
std::string descriptor_class(SymbolKind kind, std::optional<std::size_t> overload) {
  switch (kind) {
    case SymbolKind::CLASS:
    case SymbolKind::TRAIT:
      return "#";
    case SymbolKind::OBJECT:
    case SymbolKind::VALUE:
      return ".";
    case SymbolKind::METHOD:
    case SymbolKind::VARIABLE:
      return "()" + std::to_string(overload.value_or(0));
    default:
      return std::to_string(static_cast<int>(kind));
  }
}

TEST_CASE("property: random owner chains are deterministic and injective per descriptor") {
  std::mt19937_64 rng(7);
  const SymbolKind kinds[] = {SymbolKind::PACKAGE, SymbolKind::CLASS,    SymbolKind::OBJECT,
                              SymbolKind::METHOD,  SymbolKind::PARAM,    SymbolKind::TYPE_PARAM,
                              SymbolKind::VALUE,   SymbolKind::VARIABLE, SymbolKind::TRAIT};
  const char* names[] = {"a", "b", "Foo", "x1", "_y", "$z"};
  std::set<std::string> seen;
  std::set<std::string> tuples;
  for (int chain = 0; chain < 300; ++chain) {
    std::string owner;
    std::string tuple;
    for (int depth = 0; depth < 4; ++depth) {
      const SymbolKind kind = kinds[rng() % std::size(kinds)];
      const char* name = names[rng() % std::size(names)];
      std::optional<std::size_t> overload;
      if (kind == SymbolKind::METHOD && rng() % 2) overload = rng() % 3;
      const auto id = make_stable_id(owner, name, kind, overload);
      CHECK(id == make_stable_id(owner, name, kind, overload));
      tuple += descriptor_class(kind, overload) + ":" + name + "|";
      if (tuples.insert(tuple).second) CHECK(seen.insert(id).second);
      owner = id;
    }
  }
}

}  // namespace
}  // namespace scg
