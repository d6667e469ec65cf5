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

#include "qdevsim/iontrap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdevsim {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ion(const IonTrapParams& p, int j) {
  if (j < 1 || j > p.N) {
    throw std::invalid_argument("ion index " + std::to_string(j) + " outside [1, " + std::to_string(p.N) + "]");
  }
}

ComplexMatrix sideband_hamiltonian(const IonTrapParams& p, IonLevel upper) {
  p.validate();
  ComplexMatrix h = ComplexMatrix::Zero(p.ion_dim(), p.ion_dim());
  const Complex forward = p.coupling() * std::exp(-kI * p.phi);
  for (int k = 0; k < p.phonon_max; ++k) {
    const int from = p.ion_index(IonLevel::Zero, k + 1);
    const int to = p.ion_index(upper, k);
    const double amp = std::sqrt(static_cast<double>(k + 1));
    h(to, from) = forward * amp;
    h(from, to) = std::conj(forward) * amp;
  }
  return h;
}

ComplexMatrix block_propagator(const IonTrapParams& p, IonLevel upper, double t) {
  p.validate();
  if (t < 0.0) throw std::invalid_argument("sideband propagation time must be >= 0");
  ComplexMatrix u = identity(static_cast<std::size_t>(p.ion_dim()));
  for (int k = 0; k < p.phonon_max; ++k) {
    const int lower_state = p.ion_index(IonLevel::Zero, k + 1);
    const int upper_state = p.ion_index(upper, k);
    const double angle = block_frequency(p, k) * t;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    u(lower_state, lower_state) = c;
    u(upper_state, upper_state) = c;
    u(upper_state, lower_state) = -kI * std::exp(-kI * p.phi) * s;
    u(lower_state, upper_state) = -kI * std::exp(kI * p.phi) * s;
  }
  return u;
}

}  // namespace

void IonTrapParams::validate() const {
  if (N < 2) throw std::invalid_argument("IonTrapParams: N must be >= 2");
  if (phonon_max < 2) throw std::invalid_argument("IonTrapParams: phonon_max must be >= 2");
  if (!(eta > 0.0) || !(Omega > 0.0)) throw std::invalid_argument("IonTrapParams: eta and Omega must be positive");
  if (!std::isfinite(eta) || !std::isfinite(Omega) || !std::isfinite(phi) || !std::isfinite(omega_cm)) {
    throw std::invalid_argument("IonTrapParams: non-finite parameter");
  }
}

int IonTrapParams::ion_index(IonLevel level, int k) const {
  if (k < 0 || k > phonon_max) throw std::invalid_argument("phonon number out of range");
  return static_cast<int>(level) * phonon_dim() + k;
}

int IonTrapParams::register_index(IonLevel l1, IonLevel l2, int k) const {
  if (k < 0 || k > phonon_max) throw std::invalid_argument("phonon number out of range");
  return (3 * static_cast<int>(l1) + static_cast<int>(l2)) * phonon_dim() + k;
}

double IonTrapParams::coupling() const { return eta * Omega / (2.0 * std::sqrt(static_cast<double>(N))); }

double IonTrapParams::pulse_time() const { return kPi * std::sqrt(static_cast<double>(N)) / (eta * Omega); }

double lamb_dicke_ratio(const IonTrapParams& p) {
  if (!(p.omega_cm > 0.0)) throw std::invalid_argument("lamb_dicke_ratio: omega_cm must be positive");
  return p.eta * p.Omega / (2.0 * p.omega_cm);
}

double block_frequency(const IonTrapParams& p, int k) {
  return 0.5 * p.eta * p.Omega * std::sqrt(static_cast<double>(k + 1) / p.N);
}

ComplexMatrix red_sideband_h(const IonTrapParams& p, int j) {
  require_ion(p, j);
  return sideband_hamiltonian(p, IonLevel::One);
}

ComplexMatrix aux_hamiltonian(const IonTrapParams& p, int j) {
  require_ion(p, j);
  return sideband_hamiltonian(p, IonLevel::Aux);
}

ComplexMatrix sideband_propagator(const IonTrapParams& p, int j, double t) {
  require_ion(p, j);
  return block_propagator(p, IonLevel::One, t);
}

ComplexMatrix aux_propagator(const IonTrapParams& p, int j, double t) {
  require_ion(p, j);
  return block_propagator(p, IonLevel::Aux, t);
}

ComplexMatrix lift_to_register(const IonTrapParams& p, const ComplexMatrix& op, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("lift_to_register: only ions 1 and 2 form the register");
  if (op.rows() != p.ion_dim() || op.cols() != p.ion_dim()) {
    throw std::invalid_argument("lift_to_register: operator dimension does not match ion (x) phonon");
  }
  const int pd = p.phonon_dim();
  ComplexMatrix out = ComplexMatrix::Zero(p.register_dim(), p.register_dim());
  for (int spectator = 0; spectator < 3; ++spectator) {
    for (int r = 0; r < p.ion_dim(); ++r) {
      for (int c = 0; c < p.ion_dim(); ++c) {
        if (op(r, c) == Complex{}) continue;
        const int rl = r / pd, rk = r % pd;
        const int cl = c / pd, ck = c % pd;
        const int row = (j == 1 ? 3 * rl + spectator : 3 * spectator + rl) * pd + rk;
        const int col = (j == 1 ? 3 * cl + spectator : 3 * spectator + cl) * pd + ck;
        out(row, col) = op(r, c);
      }
    }
  }
  return out;
}

std::vector<int> computational_indices(const IonTrapParams& p) {
  return {p.register_index(IonLevel::Zero, IonLevel::Zero, 0), p.register_index(IonLevel::Zero, IonLevel::One, 0),
          p.register_index(IonLevel::One, IonLevel::Zero, 0), p.register_index(IonLevel::One, IonLevel::One, 0)};
}

CiracZollerGate cirac_zoller_gate(const IonTrapParams& p, PropagatorRoute route) {
  p.validate();
  IonTrapParams zero_phase = p;
  zero_phase.phi = 0.0;
  const double t = p.pulse_time();

  ComplexMatrix red;
  ComplexMatrix aux;
  if (route == PropagatorRoute::ClosedForm) {
    red = lift_to_register(zero_phase, sideband_propagator(zero_phase, 1, t), 1);
    aux = lift_to_register(zero_phase, aux_propagator(zero_phase, 2, 2.0 * t), 2);
  } else {
    red = expm(lift_to_register(zero_phase, red_sideband_h(zero_phase, 1), 1), -kI * t);
    aux = expm(lift_to_register(zero_phase, aux_hamiltonian(zero_phase, 2), 2), -kI * (2.0 * t));
  }

  CiracZollerGate out;
  out.full = red * aux * red;
  const std::vector<int> idx = computational_indices(p);
  out.reduced.resize(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.reduced(r, c) = out.full(idx[r], idx[c]);

  const int pd = p.phonon_dim();
  for (int c : idx) {
    double high = 0.0;
    for (int r = 0; r < p.register_dim(); ++r)
      if (r % pd >= 2) high += std::norm(out.full(r, c));
    double kept = 0.0;
    for (int r : idx) kept += std::norm(out.full(r, c));
    out.high_phonon_population = std::max(out.high_phonon_population, high);
    out.leakage = std::max(out.leakage, std::max(0.0, 1.0 - kept));
  }
  return out;
}

void SMParams::validate() const {
  if (delta == 0.0) throw std::invalid_argument("SMParams: delta must be nonzero");
  if (!std::isfinite(eta) || !std::isfinite(Omega) || !std::isfinite(delta)) {
    throw std::invalid_argument("SMParams: non-finite parameter");
  }
}

double SMParams::omega_sm() const {
  validate();
  return eta * eta * Omega * Omega / delta;
}

double SMParams::entangling_time() const {
  const double w = omega_sm();
  if (w == 0.0) throw std::domain_error("SMParams: Omega_SM is zero");
  return kPi / (2.0 * std::abs(w));
}

ComplexMatrix sm_hamiltonian(const SMParams& p) {
  const double half = 0.5 * p.omega_sm();
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  h(0, 3) = h(3, 0) = half;
  h(1, 2) = h(2, 1) = half;
  return h;
}

ComplexMatrix sm_gate(const SMParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("sm_gate: t must be >= 0");
  return expm(sm_hamiltonian(p), -kI * t);
}

void JPParams::validate() const {
  if (!std::isfinite(Omega)) throw std::invalid_argument("JPParams: non-finite Omega");
  const double o2 = Omega * Omega;
  for (const JPMode& m : modes) {
    if (!std::isfinite(m.eta1) || !std::isfinite(m.eta2) || !std::isfinite(m.nu)) {
      throw std::invalid_argument("JPParams: non-finite mode parameter");
    }
    const double n2 = m.nu * m.nu;
    if (std::abs(o2 - n2) <= 1e-12 * std::max(o2, n2)) {
      throw std::domain_error("JPParams: Omega^2 equals nu_p^2 for a mode (pole)");
    }
  }
}

double jp_effective_frequency(const JPParams& p) {
  p.validate();
  const double o2 = p.Omega * p.Omega;
  double sum = 0.0;
  for (const JPMode& m : p.modes) sum += m.eta1 * m.eta2 * m.nu / (o2 - m.nu * m.nu);
  return 0.5 * o2 * sum;
}

ComplexMatrix jp_hamiltonian(const JPParams& p) {
  const double w = jp_effective_frequency(p);
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  h(1, 2) = h(2, 1) = -w;
  return h;
}

double jp_entangling_time(const JPParams& p) {
  const double w = jp_effective_frequency(p);
  if (w == 0.0) throw std::domain_error("jp_entangling_time: omega_eff is zero");
  return std::abs(kPi / (4.0 * w));
}

JPGate jp_gate(const JPParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("jp_gate: t must be >= 0");
  return {jp_effective_frequency(p), expm(jp_hamiltonian(p), -kI * t)};
}

}  // namespace qdevsim
