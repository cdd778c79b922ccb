// Copyright 2026 The SwarmAttack Authors.
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

#ifndef SWARMATTACK_TOOLS_CLI_HPP_
#define SWARMATTACK_TOOLS_CLI_HPP_

#include <chrono>
#include <iosfwd>
#include <memory>
#include <string>

#include "swarmattack/victim.hpp"

namespace swarmattack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoResult = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitConnect = 3;

// Victim from a --victim spec: builtin:bow:PATH, builtin:const:IDX:L1,L2,...,
// exec:COMMAND or http://HOST:PORT.
std::unique_ptr<Victim> make_victim(const std::string& spec,
                                    std::chrono::milliseconds timeout);

// Entry point shared by the binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace swarmattack::cli

#endif  // SWARMATTACK_TOOLS_CLI_HPP_
