// Copyright 2026 The Shoreline Authors. All rights reserved.
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

#ifndef SHORELINE_CLI_HPP_
#define SHORELINE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace shoreline {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // usage or config error
  kExitUncovered = 2,     // a direction is not covered within the horizon
  kExitLemmaFailed = 3,   // a lemma verification check failed
  kExitNotConverged = 4,  // optimizer ran out of iterations
};

/// Entry point of the `shoreline` tool: evaluate | certify | lemmas |
/// optimize | plot. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shoreline

#endif  // SHORELINE_CLI_HPP_
