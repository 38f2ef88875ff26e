// Copyright 2026 The sirtp Authors
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


// The sirtp command line. RunCli is the whole program; main() only forwards
// to it, which lets tests drive every subcommand in-process.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error or malformed input,
// 3 an internal invariant was violated.

#ifndef SIRTP_CLI_H_
#define SIRTP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sirtp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Geometry with more modules than this is never materialized.
inline constexpr long long kMaxMaterializedModules = 1'000'000;

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Convenience overload; args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace sirtp

#endif  // SIRTP_CLI_H_
