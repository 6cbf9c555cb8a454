// Copyright 2026 The sfjsp Authors
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

#ifndef SFJSP_COMMANDS_HPP_
#define SFJSP_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sfjsp {

/// Entry point of the `sfjsp` tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Per-instance seed: a child of the run seed keyed by the instance name,
/// so results do not depend on input order.
std::uint64_t instance_seed(std::uint64_t seed, const std::string& name);

}  // namespace sfjsp

#endif  // SFJSP_COMMANDS_HPP_
