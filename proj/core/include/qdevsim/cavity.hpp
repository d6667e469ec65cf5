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

// Three-level atom in a single-mode cavity.
//
// Product basis {alpha, beta, gamma} (x) {|0>, ..., |n_max>}, index
// level * (n_max + 1) + n. The gamma level is detached from the field: every
// gamma row and column of the Hamiltonian is zero. The two qubits are the
// atom (|1> = beta, |0> = gamma) and the photon number (0 or 1).

#ifndef QDEVSIM_CAVITY_HPP
#define QDEVSIM_CAVITY_HPP

#include <array>

#include "qdevsim/linalg.hpp"

namespace qdevsim {

enum class AtomLevel { Alpha = 0, Beta = 1, Gamma = 2 };

struct CavityParams {
  double omega_ab = 1.0;  ///< alpha <-> beta transition angular frequency
  double nu = 1.0;        ///< cavity mode angular frequency
  double g = 0.01;        ///< atom-field coupling, >= 0
  int n_max = 3;          ///< Fock truncation, >= 2
  double validity_ratio = 10.0;

  double detuning() const { return nu - omega_ab; }
  /// |Delta| / (2 g sqrt(n_max)); infinite when g = 0.
  double detuning_ratio() const;
  bool large_detuning() const { return detuning_ratio() >= validity_ratio; }
  int dim() const { return 3 * (n_max + 1); }
  int index(AtomLevel level, int n) const;

  void validate() const;
};

/// H0 + H1 + H2 with the gamma sector zeroed.
ComplexMatrix build_hamiltonian(const CavityParams& p);

/// H restricted to span{|alpha, n-1>, |beta, n>}. Throws unless 1 <= n <= n_max.
ComplexMatrix invariant_block(const CavityParams& p, int n);

/// sqrt(Delta^2 + 4 g^2 n).
double block_splitting(const CavityParams& p, int n);

/// E_{+(n)} (sign = +1) or E_{-(n)} (sign = -1): n nu + (-nu -+ Omega_n) / 2.
double dressed_energy(const CavityParams& p, int n, int sign);

struct DressedStates {
  StateVector plus;   ///< cos t |alpha, n-1> - sin t |beta, n>
  StateVector minus;  ///< sin t |alpha, n-1> + cos t |beta, n>
  double e_plus = 0.0;
  double e_minus = 0.0;
  double sin_theta = 0.0;
  double cos_theta = 0.0;
};

/// Dressed eigenpairs of the block, embedded in the full product space.
/// Throws std::invalid_argument if n is out of range or the mixing angle is
/// undefined (g = 0 with Delta >= 0).
DressedStates dressed_states(const CavityParams& p, int n);

/// Dispersive Hamiltonian H0 + H1 - (g^2/Delta)(a a^dag |alpha><alpha| - a^dag a |beta><beta|),
/// diagonal in the product basis. Throws std::domain_error when Delta = 0.
ComplexMatrix effective_hamiltonian(const CavityParams& p);

/// -omega_ab/2 + nu + g^2/Delta, the |beta, 1> level of the dispersive Hamiltonian.
double e_minus_1(const CavityParams& p);

/// Product-basis indices of the qubit states |0,0>, |0,1>, |1,0>, |1,1>.
std::array<int, 4> qubit_indices(const CavityParams& p);

struct CavityPhaseGate {
  ComplexMatrix gate;  ///< 4x4 on the qubit subspace
  double eta = 0.0;    ///< -E_{-(1)} t, unwrapped
  /// Energy of |beta, 0> under the dispersive Hamiltonian (-omega_ab / 2). The
  /// qubit subspace takes |1,0> as its energy reference, so this amount is
  /// dropped from the |1,0> phase.
  double dropped_reference = 0.0;
};

/// Dispersive evolution of the four qubit states. With the gamma states and
/// |1,0> as zero-energy references the generator is diag(0, 0, 0, E_{-(1)}),
/// so gate = diag(1, 1, 1, e^{i eta}) with eta = -E_{-(1)} t.
CavityPhaseGate phase_gate_sim(const CavityParams& p, double t);

/// Smallest t > 0 with -E_{-(1)} t = eta (mod 2 pi). Throws std::domain_error if E_{-(1)} = 0.
double solve_time_for_eta(const CavityParams& p, double eta);

/// Qubit-subspace restriction of e^{i(H0+H1)t} e^{-i H t}. Not exactly unitary
/// once population leaks into the alpha states.
ComplexMatrix exact_interaction_frame_gate(const CavityParams& p, double t);

/// Qubit-subspace restriction of e^{i(H0+H1)t} e^{-i H_eff t}; equals
/// diag(1, 1, 1, e^{-i g^2 t / Delta}).
ComplexMatrix effective_interaction_frame_gate(const CavityParams& p, double t);

/// The exact evolution expressed in the same energy reference as
/// phase_gate_sim, so its distance to phase_gate(-E_{-(1)} t) is the
/// dispersive error.
ComplexMatrix exact_phase_gate(const CavityParams& p, double t);

/// Phase-aligned distance between exact and dispersive evolution of the
/// qubit subspace in the frame that removes H0 + H1.
double effective_vs_exact_error(const CavityParams& p, double t);

/// Largest population that leaves the qubit subspace under the exact
/// Hamiltonian, over the four qubit inputs.
double exact_leakage(const CavityParams& p, double t);

}  // namespace qdevsim

#endif  // QDEVSIM_CAVITY_HPP
