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

#include <ostream>
#include <string>
#include <string_view>

namespace scg::extract {

enum class Severity { Note, Warning, Error };

inline std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Note: return "note";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "";
}

struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string uri;
  int line = 0;    // zero-based
  int column = 0;  // zero-based
  std::string message;
};

inline std::ostream& operator<<(std::ostream& out, const Diagnostic& d) {
  return out << d.uri << ':' << (d.line + 1) << ':' << (d.column + 1) << ": "
             << to_string(d.severity) << ": " << d.message;
}

}  // namespace scg::extract
