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

// Trapped-ion gates on the centre-of-mass phonon mode.
//
// Every ion carries three internal levels {|0>, |1>, |aux>} (indices 0, 1, 2).
// Single-ion operators act on ion (x) phonon, index level * (P + 1) + k with
// P = phonon_max. The two-ion register is ion1 (x) ion2 (x) phonon, index
// (3 * l1 + l2) * (P + 1) + k. Ions beyond the first two only enter through
// the collective coupling eta * Omega / (2 sqrt N).

#ifndef QDEVSIM_IONTRAP_HPP
#define QDEVSIM_IONTRAP_HPP

#include <vector>

#include "qdevsim/linalg.hpp"

namespace qdevsim {

enum class IonLevel { Zero = 0, One = 1, Aux = 2 };

struct IonTrapParams {
  int N = 2;              ///< ions in the trap, >= 2
  double eta = 0.1;       ///< Lamb-Dicke parameter
  double Omega = 1.0;     ///< single-ion Rabi angular frequency
  int phonon_max = 3;     ///< CM-mode truncation, >= 2
  double phi = 0.0;       ///< laser phase
  double omega_cm = 10.0; ///< CM-mode angular frequency, diagnostics only

  void validate() const;
  int phonon_dim() const { return phonon_max + 1; }
  int ion_dim() const { return 3 * phonon_dim(); }
  int register_dim() const { return 9 * phonon_dim(); }
  int ion_index(IonLevel level, int k) const;
  int register_index(IonLevel l1, IonLevel l2, int k) const;
  /// Collective sideband coupling eta * Omega / (2 sqrt N).
  double coupling() const;
  /// pi sqrt(N) / (eta Omega), the single-pulse duration of the phase gate.
  double pulse_time() const;
};

/// eta * Omega / (2 omega_cm); the scheme needs this to be small.
double lamb_dicke_ratio(const IonTrapParams& p);

/// E_k = (eta Omega / 2) sqrt((k + 1) / N).
double block_frequency(const IonTrapParams& p, int k);

/// Red-sideband Hamiltonian of ion j on ion (x) phonon:
/// coupling * (|1><0| e^{-i phi} a + |0><1| e^{i phi} a^dag).
/// Throws std::invalid_argument unless 1 <= j <= N.
ComplexMatrix red_sideband_h(const IonTrapParams& p, int j);

/// Same as red_sideband_h with |aux> in place of |1>.
ComplexMatrix aux_hamiltonian(const IonTrapParams& p, int j);

/// Closed-form e^{-i H_j t}. Each block {|0,k+1>, |1,k>} rotates as
/// [[cos E_k t, -i e^{i phi} sin E_k t], [-i e^{-i phi} sin E_k t, cos E_k t]];
/// every other basis state is fixed. Throws if t < 0.
ComplexMatrix sideband_propagator(const IonTrapParams& p, int j, double t);

/// Closed-form e^{-i H_aux t}, blocks {|0,k+1>, |aux,k>}. |1,k> is fixed.
ComplexMatrix aux_propagator(const IonTrapParams& p, int j, double t);

/// Lifts an ion (x) phonon operator of ion j (1 or 2) to the two-ion register.
ComplexMatrix lift_to_register(const IonTrapParams& p, const ComplexMatrix& op, int j);

enum class PropagatorRoute { ClosedForm, Exponential };

struct CiracZollerGate {
  ComplexMatrix full;     ///< on the two-ion register
  ComplexMatrix reduced;  ///< computational block with the CM mode in |0>
  /// Largest population reaching phonon levels >= 2 from a computational input.
  double high_phonon_population = 0.0;
  /// Largest population leaving computational (x) |0>_CM.
  double leakage = 0.0;
};

/// U_1(T) U_2^aux(2T) U_1(T) with T = pi sqrt(N) / (eta Omega), phase 0.
CiracZollerGate cirac_zoller_gate(const IonTrapParams& p, PropagatorRoute route = PropagatorRoute::ClosedForm);

/// Indices of |l1, l2, 0_CM> for l1, l2 in {0, 1}, in |00>, |01>, |10>, |11> order.
std::vector<int> computational_indices(const IonTrapParams& p);

struct SMParams {
  double eta = 0.1;
  double Omega = 1.0;
  double delta = 0.1;  ///< detuning from the sidebands, nonzero

  void validate() const;
  /// eta^2 Omega^2 / delta.
  double omega_sm() const;
  /// pi / (2 Omega_SM).
  double entangling_time() const;
};

/// (Omega_SM / 2)(|00><11| + |11><00| + |10><01| + |01><10|).
ComplexMatrix sm_hamiltonian(const SMParams& p);
ComplexMatrix sm_gate(const SMParams& p, double t);

struct JPMode {
  double eta1 = 0.0;
  double eta2 = 0.0;
  double nu = 1.0;
};

struct JPParams {
  double Omega = 1.0;
  std::vector<JPMode> modes;

  /// Throws std::domain_error when Omega^2 = nu_p^2 for some mode.
  void validate() const;
};

/// (Omega^2 / 2) sum_p eta1 eta2 nu_p / (Omega^2 - nu_p^2).
double jp_effective_frequency(const JPParams& p);

/// -omega_eff (|10><01| + |01><10|).
ComplexMatrix jp_hamiltonian(const JPParams& p);

/// |pi / (4 omega_eff)|. Throws std::domain_error if omega_eff = 0.
double jp_entangling_time(const JPParams& p);

struct JPGate {
  double omega_eff = 0.0;
  ComplexMatrix gate;
};

JPGate jp_gate(const JPParams& p, double t);

}  // namespace qdevsim

#endif  // QDEVSIM_IONTRAP_HPP
