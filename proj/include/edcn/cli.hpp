// Copyright 2026 The edcn Authors
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


// Command-line front end. RunCli is separate from main so tests can drive
// every subcommand in-process.
//
// Exit codes: 0 ok, 1 verification failure, 2 input or parse error,
// 3 capability gap (no formula, no constructor, search budget exhausted).

#ifndef EDCN_CLI_HPP_
#define EDCN_CLI_HPP_

#include <ostream>

#include "edcn/error.hpp"

namespace edcn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCapability = 3;

int ExitCodeFor(ErrorCode code);

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace edcn

#endif  // EDCN_CLI_HPP_
