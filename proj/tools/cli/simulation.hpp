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

// Run configurations, builtin experiments, sweeps and the identity suite.

#ifndef QDEVSIM_CLI_SIMULATION_HPP
#define QDEVSIM_CLI_SIMULATION_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace qdevsim::cli {

/// Builtin schedule names accepted in the "schedule" field.
const std::vector<std::string>& builtin_names();

/// Runs one configuration:
///   {"device": {...}, "schedule": "<builtin>" | {"builtin": name, "options": {...}} | {"segments": [...]},
///    "target": {...}?}
/// Throws ConfigError on malformed input; precondition failures inside the
/// simulators surface as std::invalid_argument or std::domain_error.
FidelityReport simulate(const Json& config);

struct SweepRow {
  double value = 0.0;
  FidelityReport report;
};

/// Runs simulate once per entry of config["sweep"]["values"], writing each
/// value at config["sweep"]["parameter"]. A dotted parameter is a path into
/// the configuration; a bare name is a builtin option, or a device parameter
/// for explicit schedules.
std::vector<SweepRow> sweep(const Json& config);

void write_sweep_csv(std::ostream& out, const std::string& parameter, const std::vector<SweepRow>& rows);

struct IdentityResult {
  std::string name;
  double distance = 0.0;
};

/// Gate identities checked by verify-gates. `inject_sign_error` flips the
/// phase of the first rotation in the CNOT construction.
std::vector<IdentityResult> identity_suite(bool inject_sign_error = false);

}  // namespace qdevsim::cli

#endif  // QDEVSIM_CLI_SIMULATION_HPP
