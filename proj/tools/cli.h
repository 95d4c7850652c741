// Copyright 2026 The vntn Authors.
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

// Batch front end. See `vntn --help`.

#ifndef VNTN_TOOLS_CLI_H_
#define VNTN_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace vntn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIoError = 1;
inline constexpr int kExitConfigError = 2;

// Runs the CLI with args[0] as the program name. `in`/`out` are used unless
// --input/--output name files; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace vntn::cli

#endif  // VNTN_TOOLS_CLI_H_
