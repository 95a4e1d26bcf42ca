//
// Copyright 2026 The dpcondorcet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// The dpcondorcet command line, callable in-process for tests.

#ifndef DPCONDORCET_TOOLS_CLI_H_
#define DPCONDORCET_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dpcondorcet {

inline constexpr char kToolVersion[] = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAxiomViolated = 2;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_TOOLS_CLI_H_
