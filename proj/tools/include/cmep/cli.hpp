// Copyright 2026 The cmep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMEP_CLI_HPP
#define CMEP_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cmep/json_io.hpp"

namespace cmep::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kCapacity = 3,
};

struct CommandResult {
  int exit_code = kOk;
  json::Json payload;    // null for help and usage errors
  std::string rendered;  // exactly what the binary prints to stdout
  std::string error;     // what it prints to stderr
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

// EULERIAN_CAP when set and valid, else kDefaultEnumerationCap.
std::uint64_t enumeration_cap_from_env();

// Indented key/value view of a payload. Polynomials print as sums.
std::string render_pretty(const json::Json& payload);

}  // namespace cmep::cli

#endif  // CMEP_CLI_HPP
