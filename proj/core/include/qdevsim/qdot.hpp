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

// Two exchange-coupled quantum-dot spins.
//
// H = (1/2)(Omega1 . sigma + Omega2 . tau + w sigma . tau), with sigma acting
// on dot 1 (slot 1) and tau on dot 2. Schedules use the channels omega1,
// omega2 (3-vectors) and exchange (scalar).

#ifndef QDEVSIM_QDOT_HPP
#define QDEVSIM_QDOT_HPP

#include <array>
#include <string>
#include <vector>

#include "qdevsim/linalg.hpp"
#include "qdevsim/schedule.hpp"

namespace qdevsim {

ComplexMatrix build_h(const Vector3& omega1, const Vector3& omega2, double w);

/// The dot Hamiltonian of one schedule segment.
ComplexMatrix dot_segment_hamiltonian(const Segment& seg);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;  ///< largest entrywise deviation
};

/// Algebraic identities of sigma . tau and the swap operator.
std::vector<IdentityCheck> sigma_tau_identities();

/// Exchange-only segment with integral w dt = area.
PulseSchedule exchange_schedule(double area, double duration = 1.0);

/// Dot `dot` driven along (cos phi, sin phi, 0) with area 2 theta, giving
/// rotation_gate(theta, phi) on that dot.
PulseSchedule rotation_schedule(double theta, double phi, int dot = 1, double duration = 1.0);

/// Dot `dot` driven along z with the given area: exp(-i (area/2) sigma_z).
PulseSchedule z_schedule(double area, int dot, double duration = 1.0);

/// Time-ordered propagator of a dot schedule. Throws std::invalid_argument
/// for a schedule of another device.
ComplexMatrix evolve_schedule(const PulseSchedule& s);

/// e^{i p}[cos(2p) 1 - i sin(2p) U_sw] with p = area / 2.
ComplexMatrix exchange_closed_form(double area);

/// Exchange pi/4, dot-1 z area -pi, exchange pi/4, dot-2 z area -pi/2,
/// dot-1 z area +pi/2, in time order.
PulseSchedule qpi_schedule();
ComplexMatrix qpi_sequence();

using OperatorTriple = std::array<ComplexMatrix, 3>;

struct HeisenbergFrame {
  double t = 0.0;
  OperatorTriple sigma;
  OperatorTriple tau;
};

OperatorTriple sigma_triple();
OperatorTriple tau_triple();

/// Formal cross product with components multiplied in the written order:
/// (a x b)_x = a_y b_z - a_z b_y.
OperatorTriple cross(const OperatorTriple& a, const OperatorTriple& b);
OperatorTriple cross(const Vector3& a, const OperatorTriple& b);

/// sigma(t) = U(t)^dag sigma U(t) and likewise for tau, with U(t) the
/// propagator of the schedule truncated at t. Throws if any t lies outside
/// [0, total duration].
std::vector<HeisenbergFrame> heisenberg_evolve(const PulseSchedule& s, const std::vector<double>& times);

/// Exchange-only solution with varphi = 2 integral w dt:
/// sigma = (s + t)/2 + (s - t)/2 cos varphi - (s x t)/2 sin varphi, and tau
/// with the two oscillating signs flipped.
HeisenbergFrame heisenberg_exchange_closed_form(double varphi);

struct HeisenbergResidual {
  double residual = 0.0;      ///< max Frobenius deviation over samples and components
  double hamiltonian_norm = 0.0;  ///< max spectral norm of the segment Hamiltonians
};

/// Central-difference check of d sigma/dt = Omega1 x sigma - w sigma x tau and
/// d tau/dt = Omega2 x tau + w sigma x tau at the given sample times. Samples
/// must sit at least `step` away from segment boundaries.
HeisenbergResidual heisenberg_residual(const PulseSchedule& s, const std::vector<double>& times,
                                       double step = 1e-4);

/// Dyson series of a dot schedule truncated at `order` (0..8).
ComplexMatrix dyson_propagator(const PulseSchedule& s, int order);

/// Largest entrywise deviation between two operator triples.
double max_deviation(const OperatorTriple& a, const OperatorTriple& b);

}  // namespace qdevsim

#endif  // QDEVSIM_QDOT_HPP
