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

// Device models and schedule propagation across all supported devices.
//
// Channel meanings:
//   atom    rabi, phase     resonant rotating-frame drive
//   cavity  coupling        atom-field coupling g during the segment
//   ion_cz  red1, red2      multiplier of the red-sideband Hamiltonian of ion 1, 2
//           aux1, aux2      multiplier of the auxiliary-transition Hamiltonian of ion 1, 2
//   ion_sm  sm              multiplier of the effective Hamiltonian
//   ion_jp  jp              multiplier of the effective Hamiltonian
//   dots    omega1, omega2, exchange

#ifndef QDEVSIM_DEVICE_HPP
#define QDEVSIM_DEVICE_HPP

#include <variant>

#include "qdevsim/atom.hpp"
#include "qdevsim/cavity.hpp"
#include "qdevsim/iontrap.hpp"
#include "qdevsim/schedule.hpp"

namespace qdevsim {

struct DotPairParams {};

struct TwoLevelAtom {
  AtomParams params;
};
struct CavityQED {
  CavityParams params;
};
struct IonTrapCZ {
  IonTrapParams params;
};
struct IonTrapSM {
  SMParams params;
};
struct IonTrapJP {
  JPParams params;
};
struct QuantumDotPair {
  DotPairParams params;
};

using DeviceModel = std::variant<TwoLevelAtom, CavityQED, IonTrapCZ, IonTrapSM, IonTrapJP, QuantumDotPair>;

DeviceKind device_kind(const DeviceModel& device);

/// Hilbert-space dimension the device's Hamiltonians act on.
Eigen::Index device_dimension(const DeviceModel& device);

/// Hamiltonian of one segment. Throws std::invalid_argument on channels that
/// do not belong to the device.
ComplexMatrix segment_hamiltonian(const DeviceModel& device, const Segment& seg);

/// Time-ordered propagator. Throws std::invalid_argument if the schedule was
/// built for another device or an assembled Hamiltonian is not Hermitian.
ComplexMatrix propagate(const DeviceModel& device, const PulseSchedule& s);

}  // namespace qdevsim

#endif  // QDEVSIM_DEVICE_HPP
