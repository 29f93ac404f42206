/*
   Copyright 2026 The polymod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polymod::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

/// Runs one subcommand. args excludes the program name. Output is written
/// only once the command has finished, so a cancelled run prints nothing
/// but its error object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymod::cli
