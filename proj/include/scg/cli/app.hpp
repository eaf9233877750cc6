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

#include <iosfwd>

namespace scg::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;  // ran, but some inputs failed
inline constexpr int kExitUsage = 2;    // bad arguments or unreadable input

// Entry point of the scg-cli tool: generate, summary, crucial, similar,
// partition, export and serve.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scg::cli
