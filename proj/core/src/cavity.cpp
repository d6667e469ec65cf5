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

#include "qdevsim/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdevsim/fock.hpp"

namespace qdevsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexMatrix level_projector(AtomLevel a, AtomLevel b) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(static_cast<int>(a), static_cast<int>(b)) = 1.0;
  return m;
}

void require_block(const CavityParams& p, int n) {
  if (n < 1 || n > p.n_max) {
    throw std::invalid_argument("cavity block index " + std::to_string(n) + " outside [1, " +
                                std::to_string(p.n_max) + "]");
  }
}

/// H0 + H1 with the gamma sector zeroed.
ComplexMatrix free_hamiltonian(const CavityParams& p) {
  const FockSpace space(p.n_max);
  const ComplexMatrix atom = 0.5 * p.omega_ab *
                             (level_projector(AtomLevel::Alpha, AtomLevel::Alpha) -
                              level_projector(AtomLevel::Beta, AtomLevel::Beta));
  const ComplexMatrix active = level_projector(AtomLevel::Alpha, AtomLevel::Alpha) +
                               level_projector(AtomLevel::Beta, AtomLevel::Beta);
  return kron(atom, identity(static_cast<std::size_t>(space.dim()))) + p.nu * kron(active, number_op(space));
}

ComplexMatrix restrict_to_qubits(const CavityParams& p, const ComplexMatrix& full) {
  const auto idx = qubit_indices(p);
  ComplexMatrix out(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = full(idx[r], idx[c]);
  return out;
}

ComplexMatrix diagonal_exp(const ComplexMatrix& h, double t) {
  ComplexMatrix out = ComplexMatrix::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < h.rows(); ++i) out(i, i) = std::exp(-kI * h(i, i).real() * t);
  return out;
}

}  // namespace

double CavityParams::detuning_ratio() const {
  if (g == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(detuning()) / (2.0 * g * std::sqrt(static_cast<double>(n_max)));
}

int CavityParams::index(AtomLevel level, int n) const {
  if (n < 0 || n > n_max) throw std::invalid_argument("photon number out of range");
  return static_cast<int>(level) * (n_max + 1) + n;
}

void CavityParams::validate() const {
  if (!std::isfinite(omega_ab) || !std::isfinite(nu) || !std::isfinite(g) || !std::isfinite(validity_ratio)) {
    throw std::invalid_argument("CavityParams: non-finite parameter");
  }
  if (g < 0.0) throw std::invalid_argument("CavityParams: g must be >= 0");
  if (n_max < 2) throw std::invalid_argument("CavityParams: n_max must be >= 2");
  if (!(validity_ratio > 0.0)) throw std::invalid_argument("CavityParams: validity ratio must be positive");
}

ComplexMatrix build_hamiltonian(const CavityParams& p) {
  p.validate();
  const LadderOps ops = ladder_ops(FockSpace(p.n_max));
  return free_hamiltonian(p) + p.g * (kron(level_projector(AtomLevel::Alpha, AtomLevel::Beta), ops.a) +
                                      kron(level_projector(AtomLevel::Beta, AtomLevel::Alpha), ops.a_dag));
}

ComplexMatrix invariant_block(const CavityParams& p, int n) {
  p.validate();
  require_block(p, n);
  const double coupling = p.g * std::sqrt(static_cast<double>(n));
  ComplexMatrix b(2, 2);
  b << 0.5 * p.omega_ab + p.nu * (n - 1), coupling,
       coupling, -0.5 * p.omega_ab + p.nu * n;
  return b;
}

double block_splitting(const CavityParams& p, int n) {
  const double delta = p.detuning();
  return std::sqrt(delta * delta + 4.0 * p.g * p.g * n);
}

double dressed_energy(const CavityParams& p, int n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("dressed_energy: sign must be +1 or -1");
  return n * p.nu + 0.5 * (-p.nu - sign * block_splitting(p, n));
}

DressedStates dressed_states(const CavityParams& p, int n) {
  p.validate();
  require_block(p, n);
  const double omega_n = block_splitting(p, n);
  const double gap = omega_n - p.detuning();
  const double coupling_sq = 4.0 * p.g * p.g * n;
  const double d = std::sqrt(gap * gap + coupling_sq);
  if (d == 0.0) throw std::invalid_argument("dressed_states: mixing angle undefined (D = 0)");

  DressedStates out;
  out.sin_theta = gap / d;
  out.cos_theta = std::sqrt(coupling_sq) / d;
  const int ia = p.index(AtomLevel::Alpha, n - 1);
  const int ib = p.index(AtomLevel::Beta, n);
  out.plus = StateVector::Zero(p.dim());
  out.minus = StateVector::Zero(p.dim());
  out.plus(ia) = out.cos_theta;
  out.plus(ib) = -out.sin_theta;
  out.minus(ia) = out.sin_theta;
  out.minus(ib) = out.cos_theta;
  out.e_plus = dressed_energy(p, n, 1);
  out.e_minus = dressed_energy(p, n, -1);
  return out;
}

ComplexMatrix effective_hamiltonian(const CavityParams& p) {
  p.validate();
  const double delta = p.detuning();
  if (delta == 0.0) throw std::domain_error("effective_hamiltonian: detuning is zero");
  const LadderOps ops = ladder_ops(FockSpace(p.n_max));
  const double chi = p.g * p.g / delta;
  return free_hamiltonian(p) - chi * (kron(level_projector(AtomLevel::Alpha, AtomLevel::Alpha), ops.a * ops.a_dag) -
                                      kron(level_projector(AtomLevel::Beta, AtomLevel::Beta), ops.a_dag * ops.a));
}

double e_minus_1(const CavityParams& p) {
  const double delta = p.detuning();
  if (delta == 0.0) throw std::domain_error("e_minus_1: detuning is zero");
  return -0.5 * p.omega_ab + p.nu + p.g * p.g / delta;
}

std::array<int, 4> qubit_indices(const CavityParams& p) {
  return {p.index(AtomLevel::Gamma, 0), p.index(AtomLevel::Gamma, 1), p.index(AtomLevel::Beta, 0),
          p.index(AtomLevel::Beta, 1)};
}

CavityPhaseGate phase_gate_sim(const CavityParams& p, double t) {
  const ComplexMatrix h_eff = effective_hamiltonian(p);
  ComplexMatrix generator = restrict_to_qubits(p, h_eff);
  const double reference = generator(2, 2).real();
  generator(2, 2) = 0.0;

  CavityPhaseGate out;
  out.gate = expm(generator, -kI * t);
  out.eta = -generator(3, 3).real() * t;
  out.dropped_reference = reference;
  return out;
}

double solve_time_for_eta(const CavityParams& p, double eta) {
  const double energy = e_minus_1(p);
  if (energy == 0.0 || !std::isfinite(energy)) {
    throw std::domain_error("solve_time_for_eta: E_-(1) is zero, no phase accumulates");
  }
  const double rate = -energy;
  double target = std::fmod(rate > 0.0 ? eta : -eta, kTwoPi);
  if (target < 0.0) target += kTwoPi;
  if (target == 0.0) target = kTwoPi;
  return target / std::abs(rate);
}

ComplexMatrix exact_interaction_frame_gate(const CavityParams& p, double t) {
  const ComplexMatrix frame = diagonal_exp(free_hamiltonian(p), -t);
  return restrict_to_qubits(p, frame * expm(build_hamiltonian(p), -kI * t));
}

ComplexMatrix effective_interaction_frame_gate(const CavityParams& p, double t) {
  const ComplexMatrix frame = diagonal_exp(free_hamiltonian(p), -t);
  return restrict_to_qubits(p, frame * diagonal_exp(effective_hamiltonian(p), t));
}

ComplexMatrix exact_phase_gate(const CavityParams& p, double t) {
  ComplexMatrix shift = identity(4);
  shift(3, 3) = std::exp(-kI * (-0.5 * p.omega_ab + p.nu) * t);
  return shift * exact_interaction_frame_gate(p, t);
}

double effective_vs_exact_error(const CavityParams& p, double t) {
  return align_phase(exact_interaction_frame_gate(p, t), effective_interaction_frame_gate(p, t)).distance;
}

double exact_leakage(const CavityParams& p, double t) {
  const ComplexMatrix u = expm(build_hamiltonian(p), -kI * t);
  const auto idx = qubit_indices(p);
  double worst = 0.0;
  for (int c : idx) {
    double kept = 0.0;
    for (int r : idx) kept += std::norm(u(r, c));
    worst = std::max(worst, 1.0 - kept);
  }
  return std::max(worst, 0.0);
}

}  // namespace qdevsim
