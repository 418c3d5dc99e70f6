// Copyright 2026 The choimaps Authors
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
#include <vector>

namespace choimaps::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
/// verify-map found a counterexample, or horodecki found a detection.
inline constexpr int kExitFinding = 2;

/// Entry point behind the `choimaps` executable. `args` excludes the program
/// name. Results go to `out` (or --out), diagnostics to `err`.
///
/// Subcommands: verify-map, detect, scan, ppt-check, horodecki.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace choimaps::cli
