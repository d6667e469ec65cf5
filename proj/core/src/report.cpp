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

#include "qdevsim/report.hpp"

#include <cmath>
#include <stdexcept>

namespace qdevsim {

FidelityReport make_report(const ComplexMatrix& actual, const GateSpec& target,
                           std::string device, std::string schedule_name) {
  const ComplexMatrix ideal = materialize(target);
  if (ideal.rows() != actual.rows()) {
    throw std::invalid_argument("make_report: target dimension " + std::to_string(ideal.rows()) +
                                " does not match simulated dimension " +
                                std::to_string(actual.rows()));
  }
  const PhaseAlignment fit = align_phase(actual, ideal);

  FidelityReport report;
  report.device = std::move(device);
  report.schedule_name = std::move(schedule_name);
  report.target = target;
  report.distance = fit.distance;
  report.global_phase = fit.phase;
  report.basis_action.assign(actual.data(), actual.data() + actual.size());
  return report;
}

ComplexMatrix basis_action_matrix(const FidelityReport& report) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(report.basis_action.size())));
  if (n * n != static_cast<Eigen::Index>(report.basis_action.size())) {
    throw std::invalid_argument("basis_action length is not a perfect square");
  }
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n * n; ++i) m.data()[i] = report.basis_action[static_cast<std::size_t>(i)];
  return m;
}

}  // namespace qdevsim
