// Copyright 2026 The mdpart Authors
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

#ifndef MDPART_TOOLS_CLI_HPP
#define MDPART_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mdpart::cli {

/// Exit statuses shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`, and returns the exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mdpart::cli

#endif  // MDPART_TOOLS_CLI_HPP
