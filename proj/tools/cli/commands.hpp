// Copyright 2026 The qdevsim Authors
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

#ifndef QDEVSIM_CLI_COMMANDS_HPP
#define QDEVSIM_CLI_COMMANDS_HPP

#include <ostream>
#include <string>

namespace qdevsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecondition = 3;

/// Prints one row per identity; returns kExitOk iff every distance < tol.
int cmd_verify_gates(double tol, bool inject_sign_error, std::ostream& out);

/// Writes the JSON report to out_path, or to `out` when out_path is empty.
int cmd_simulate(const std::string& config_path, const std::string& out_path, std::ostream& out, std::ostream& err);

/// Writes the sweep CSV to out_path, or to `out` when out_path is empty.
int cmd_sweep(const std::string& config_path, const std::string& out_path, std::ostream& out, std::ostream& err);

}  // namespace qdevsim::cli

#endif  // QDEVSIM_CLI_COMMANDS_HPP
