/* Copyright 2026 The ruledcodes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#ifndef RULEDCODES_TOOLS_CLI_H_
#define RULEDCODES_TOOLS_CLI_H_

#include <iosfwd>

namespace ruledcodes {

// Exit codes: 0 success, 1 verification failure, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line with the given streams for reports and diagnostics.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ruledcodes

#endif  // RULEDCODES_TOOLS_CLI_H_
