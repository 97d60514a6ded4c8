// Copyright 2026 The bbforest Authors
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


// Command-line front end. Exit codes: 0 success or pass, 1 verification
// failure, 2 usage or input error. Reports go to `out`, diagnostics to `err`.

#ifndef BBFOREST_CLI_HPP_
#define BBFOREST_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace bbforest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace bbforest::cli

#endif  // BBFOREST_CLI_HPP_
