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
#include <string_view>
#include <vector>

#include "scg/extract/ast.hpp"
#include "scg/extract/diagnostics.hpp"

namespace scg::extract {

struct ParseResult {
  CompilationUnit unit;
  std::vector<Diagnostic> diagnostics;
  // Set when the file could not be parsed at all (unbalanced brackets,
  // unterminated literal). `unit` is then empty apart from its uri.
  std::optional<Diagnostic> fatal;
};

// Parses one source file. Constructs outside the supported subset (lambdas,
// method references, anonymous class bodies, local classes, switch
// expressions, records, annotation types) are skipped with a diagnostic;
// statement- and member-level syntax errors are recovered from.
ParseResult parse_source(std::string_view text, std::string uri);

}  // namespace scg::extract
