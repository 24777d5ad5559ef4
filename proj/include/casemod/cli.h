// Copyright 2026 The casemod Authors
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

// Command-line front end. Exit codes: 0 decided or verified, 1 certificate
// rejected, 2 parse error, 3 invalid instance or argument, 4 resource limit,
// 64 usage error.

#ifndef CASEMOD_CLI_H_
#define CASEMOD_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace casemod {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitResourceLimit = 4;
inline constexpr int kExitUsage = 64;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace casemod

#endif  // CASEMOD_CLI_H_
