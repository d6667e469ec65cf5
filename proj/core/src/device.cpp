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

#include "qdevsim/device.hpp"

#include <stdexcept>
#include <string>

#include "qdevsim/qdot.hpp"
#include "overloaded.hpp"

namespace qdevsim {

using detail::Overloaded;

DeviceKind device_kind(const DeviceModel& device) {
  return std::visit(Overloaded{
                        [](const TwoLevelAtom&) { return DeviceKind::TwoLevelAtom; },
                        [](const CavityQED&) { return DeviceKind::CavityQED; },
                        [](const IonTrapCZ&) { return DeviceKind::IonTrapCZ; },
                        [](const IonTrapSM&) { return DeviceKind::IonTrapSM; },
                        [](const IonTrapJP&) { return DeviceKind::IonTrapJP; },
                        [](const QuantumDotPair&) { return DeviceKind::QuantumDotPair; },
                    },
                    device);
}

Eigen::Index device_dimension(const DeviceModel& device) {
  return std::visit(Overloaded{
                        [](const TwoLevelAtom&) -> Eigen::Index { return 2; },
                        [](const CavityQED& d) -> Eigen::Index { return d.params.dim(); },
                        [](const IonTrapCZ& d) -> Eigen::Index { return d.params.register_dim(); },
                        [](const IonTrapSM&) -> Eigen::Index { return 4; },
                        [](const IonTrapJP&) -> Eigen::Index { return 4; },
                        [](const QuantumDotPair&) -> Eigen::Index { return 4; },
                    },
                    device);
}

ComplexMatrix segment_hamiltonian(const DeviceModel& device, const Segment& seg) {
  const auto& allowed = channel_set(device_kind(device));
  for (const auto& entry : seg.channels) {
    if (!allowed.contains(entry.first)) throw std::invalid_argument("channel '" + entry.first + "' not valid here");
  }
  return std::visit(
      Overloaded{
          [&](const TwoLevelAtom&) { return effective_hamiltonian(seg.scalar("rabi"), seg.scalar("phase")); },
          [&](const CavityQED& d) {
            CavityParams p = d.params;
            p.g = seg.scalar("coupling");
            return build_hamiltonian(p);
          },
          [&](const IonTrapCZ& d) {
            const IonTrapParams& p = d.params;
            ComplexMatrix h = ComplexMatrix::Zero(p.register_dim(), p.register_dim());
            for (int j = 1; j <= 2; ++j) {
              const double red = seg.scalar("red" + std::to_string(j));
              const double aux = seg.scalar("aux" + std::to_string(j));
              if (red != 0.0) h += red * lift_to_register(p, red_sideband_h(p, j), j);
              if (aux != 0.0) h += aux * lift_to_register(p, aux_hamiltonian(p, j), j);
            }
            return h;
          },
          [&](const IonTrapSM& d) -> ComplexMatrix { return seg.scalar("sm") * sm_hamiltonian(d.params); },
          [&](const IonTrapJP& d) -> ComplexMatrix { return seg.scalar("jp") * jp_hamiltonian(d.params); },
          [&](const QuantumDotPair&) { return dot_segment_hamiltonian(seg); },
      },
      device);
}

ComplexMatrix propagate(const DeviceModel& device, const PulseSchedule& s) {
  if (s.kind() != device_kind(device)) {
    throw std::invalid_argument("schedule for device '" + device_kind_name(s.kind()) + "' applied to device '" +
                                device_kind_name(device_kind(device)) + "'");
  }
  return time_ordered_product(
      s, [&](const Segment& seg) { return segment_hamiltonian(device, seg); }, device_dimension(device));
}

}  // namespace qdevsim
