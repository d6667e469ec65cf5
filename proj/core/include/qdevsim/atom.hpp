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

// Two-level atom driven by a classical field.
//
// Amplitudes (C0, C1) obey the exact equation with cos(nu t) couplings; the
// rotating-wave propagator acts on the frame-shifted amplitudes
// c_j = C_j e^{i omega_j t}. Level 1 is the upper level, omega = omega1 - omega0
// and Delta = omega - nu.

#ifndef QDEVSIM_ATOM_HPP
#define QDEVSIM_ATOM_HPP

#include "qdevsim/linalg.hpp"

namespace qdevsim {

struct AtomParams {
  double omega0 = 0.0;  ///< lower level angular frequency
  double omega1 = 1.0;  ///< upper level angular frequency
  double nu = 1.0;      ///< drive angular frequency
  double rabi = 0.1;    ///< Rabi angular frequency, >= 0
  double phi = 0.0;     ///< drive phase

  double transition() const { return omega1 - omega0; }
  double detuning() const { return transition() - nu; }
  /// sqrt(rabi^2 + detuning^2).
  double generalized_rabi() const;

  /// Throws std::invalid_argument on a negative Rabi frequency or non-finite field.
  void validate() const;

  /// Resonant parameters with omega0 = 0 and omega1 = nu.
  static AtomParams resonant(double nu, double rabi, double phi);
};

/// Closed-form rotating-wave propagator for (c0, c1). At resonance it is
/// [[cos(W t/2), i e^{-i phi} sin(W t/2)], [i e^{i phi} sin(W t/2), cos(W t/2)]].
ComplexMatrix rwa_propagator(const AtomParams& p, double t);

/// Hamiltonian whose propagator equals the resonant rwa_propagator:
/// H = -(W/2)(e^{i phi}|1><0| + e^{-i phi}|0><1|).
ComplexMatrix effective_hamiltonian(double rabi, double phi);

/// Fixed-step RK4 integration of the exact (non-RWA) equation, returning the
/// propagator for (C0, C1). Unitarity drift is left in place.
/// Throws std::invalid_argument if t < 0, steps < 1, or
/// (t/steps) * max(nu, rabi, |omega0|, |omega1|) >= 0.1.
ComplexMatrix integrate_full(const AtomParams& p, double t, int steps);

/// Maps a lab-frame propagator to the rotating frame: diag(e^{i w0 t}, e^{i w1 t}) U.
ComplexMatrix to_rotating_frame(const AtomParams& p, double t, const ComplexMatrix& lab);

/// Phase-aligned distance between the frame-transformed exact propagator and
/// the rotating-wave propagator at time t.
double rwa_error(const AtomParams& p, double t, int steps);

/// Smallest RK4 step count satisfying the integrate_full step bound with the
/// given step * frequency product.
int rk4_steps_for(const AtomParams& p, double t, double step_frequency_product = 0.01);

struct RotationPulse {
  double duration = 0.0;
  double phase = 0.0;  ///< drive phase in [0, 2 pi)
};

/// Resonant pulse realizing rotation_gate(theta, phi_target):
/// duration 2 theta / rabi and drive phase phi_target - pi.
/// Throws std::invalid_argument unless rabi > 0 and theta >= 0.
RotationPulse pulse_for_rotation(double theta, double phi_target, double rabi);

}  // namespace qdevsim

#endif  // QDEVSIM_ATOM_HPP
