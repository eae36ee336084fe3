// Copyright 2026 The IRNI Authors
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

#ifndef IRNI_TOOLS_CLI_H_
#define IRNI_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace irni::cli {

// Exit statuses of the irni tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

// Overrides the default seed (42) when set to a decimal integer.
inline constexpr char kSeedEnvVar[] = "IRNI_SEED";

// Runs one invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace irni::cli

#endif  // IRNI_TOOLS_CLI_H_
