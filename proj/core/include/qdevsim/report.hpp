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

#ifndef QDEVSIM_REPORT_HPP
#define QDEVSIM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qdevsim/gate_spec.hpp"
#include "qdevsim/linalg.hpp"

namespace qdevsim {

/// Validity ratios of the approximations behind a simulation. Absent ratios
/// do not apply to the device that produced the report.
struct Diagnostics {
  std::optional<double> lamb_dicke_ratio;
  std::optional<double> detuning_ratio;
  std::optional<double> rwa_ratio;
  double leakage = 0.0;
};

struct FidelityReport {
  std::string device;
  std::string schedule_name;
  GateSpec target;
  double distance = 0.0;
  Complex global_phase{1.0, 0.0};
  /// Column-major entries of the simulated gate: entry d*k + r is <r|U|k>,
  /// the amplitude of basis state r produced from input basis state k.
  std::vector<Complex> basis_action;
  Diagnostics diagnostics;
};

/// Compares `actual` with the materialized target modulo global phase.
/// `global_phase` is the c minimizing ||actual - c target||.
FidelityReport make_report(const ComplexMatrix& actual, const GateSpec& target,
                           std::string device, std::string schedule_name);

/// Rebuilds the gate matrix from basis_action.
ComplexMatrix basis_action_matrix(const FidelityReport& report);

}  // namespace qdevsim

#endif  // QDEVSIM_REPORT_HPP
