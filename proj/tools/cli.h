/*
 * Copyright 2026 The blendaug Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line driver. Every subcommand returns 0 on success, 1 on a runtime
// or data error and 2 on a usage or configuration error.

#ifndef BLENDAUG_TOOLS_CLI_H_
#define BLENDAUG_TOOLS_CLI_H_

#include <ostream>

namespace blendaug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

// Name of the environment variable consulted when no seed is given.
inline constexpr const char* kSeedEnv = "BLENDAUG_SEED";

// Parses argv and runs one subcommand. Machine output (CSV, JSONL) goes to
// `out` unless redirected with --out; logs and summaries go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blendaug::cli

#endif  // BLENDAUG_TOOLS_CLI_H_
