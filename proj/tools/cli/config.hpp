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

// JSON configuration and report encoding for the command-line tool.

#ifndef QDEVSIM_CLI_CONFIG_HPP
#define QDEVSIM_CLI_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "qdevsim/device.hpp"
#include "qdevsim/gate_spec.hpp"
#include "qdevsim/report.hpp"
#include "qdevsim/schedule.hpp"

namespace qdevsim::cli {

using Json = nlohmann::json;

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads and parses a JSON file. Throws ConfigError on I/O or syntax errors.
Json load_json_file(const std::string& path);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json gate_spec_to_json(const GateSpec& spec);
GateSpec gate_spec_from_json(const Json& j);

/// {"kind": "<device>", "params": {...}}.
DeviceModel device_from_json(const Json& j);

/// {"segments": [{"duration": d, "channels": {"name": value | [x, y, z]}}]}.
PulseSchedule schedule_from_json(DeviceKind kind, const Json& j);

Json report_to_json(const FidelityReport& report);
FidelityReport report_from_json(const Json& j);

}  // namespace qdevsim::cli

#endif  // QDEVSIM_CLI_CONFIG_HPP
