// Copyright 2026 The Cannon Authors
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

#ifndef CANNON_CLI_HPP_
#define CANNON_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cannon::cli {

  enum ExitCode : int {
    success         = 0,  // also: accepted, equal
    negative        = 1,  // rejected, unequal, invalid system
    usage_error     = 2,  // bad arguments, unreadable or malformed input
    budget_exceeded = 3,
  };

  // Runs one command line (without the program name).
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err,
          bool                            out_is_terminal = false);

}  // namespace cannon::cli

#endif  // CANNON_CLI_HPP_
