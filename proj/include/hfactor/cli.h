// Copyright 2026 The hfactor Authors
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

#ifndef HFACTOR_CLI_H_
#define HFACTOR_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hfactor::cli {

// Exit codes shared by every subcommand. Instance parse errors use 10 and up
// (see InstanceError::exit_code).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitCapRefused = 2;
inline constexpr int kExitUsage = 3;

// Runs `hfactor <args...>` (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hfactor::cli

#endif  // HFACTOR_CLI_H_
