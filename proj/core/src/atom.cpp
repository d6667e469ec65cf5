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

#include "qdevsim/atom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdevsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxStepFrequency = 0.1;

double fastest_rate(const AtomParams& p) {
  return std::max({std::abs(p.nu), p.rabi, std::abs(p.omega0), std::abs(p.omega1)});
}

}  // namespace

double AtomParams::generalized_rabi() const { return std::hypot(rabi, detuning()); }

void AtomParams::validate() const {
  if (!(rabi >= 0.0)) throw std::invalid_argument("AtomParams: rabi must be >= 0");
  if (!std::isfinite(omega0) || !std::isfinite(omega1) || !std::isfinite(nu) || !std::isfinite(rabi) ||
      !std::isfinite(phi)) {
    throw std::invalid_argument("AtomParams: non-finite parameter");
  }
}

AtomParams AtomParams::resonant(double nu, double rabi, double phi) {
  return AtomParams{0.0, nu, nu, rabi, phi};
}

ComplexMatrix rwa_propagator(const AtomParams& p, double t) {
  p.validate();
  if (t < 0.0) throw std::invalid_argument("rwa_propagator: t must be >= 0");
  const double w = p.generalized_rabi();
  const double delta = p.detuning();
  ComplexMatrix u(2, 2);
  if (w == 0.0) {
    u.setIdentity();
    return u;
  }
  const double c = std::cos(0.5 * w * t);
  const double s = std::sin(0.5 * w * t);
  const Complex lower = std::exp(-0.5 * kI * delta * t);
  const Complex upper = std::exp(0.5 * kI * delta * t);
  u(0, 0) = lower * (c + kI * (delta / w) * s);
  u(0, 1) = lower * kI * (p.rabi / w) * std::exp(-kI * p.phi) * s;
  u(1, 0) = upper * kI * (p.rabi / w) * std::exp(kI * p.phi) * s;
  u(1, 1) = upper * (c - kI * (delta / w) * s);
  return u;
}

ComplexMatrix effective_hamiltonian(double rabi, double phi) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(1, 0) = -0.5 * rabi * std::exp(kI * phi);
  h(0, 1) = -0.5 * rabi * std::exp(-kI * phi);
  return h;
}

ComplexMatrix integrate_full(const AtomParams& p, double t, int steps) {
  p.validate();
  if (t < 0.0) throw std::invalid_argument("integrate_full: t must be >= 0");
  if (steps < 1) throw std::invalid_argument("integrate_full: steps must be >= 1");
  const double h = t / steps;
  if (h * fastest_rate(p) >= kMaxStepFrequency) {
    throw std::invalid_argument("integrate_full: step too large for the fastest frequency");
  }

  const Complex up = kI * p.rabi * std::exp(-kI * p.phi);
  const Complex down = kI * p.rabi * std::exp(kI * p.phi);
  auto generator = [&](double time) {
    const double drive = std::cos(p.nu * time);
    Eigen::Matrix2cd m;
    m << -kI * p.omega0, up * drive, down * drive, -kI * p.omega1;
    return m;
  };

  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  for (int k = 0; k < steps; ++k) {
    const double t0 = k * h;
    const Eigen::Matrix2cd m0 = generator(t0);
    const Eigen::Matrix2cd mh = generator(t0 + 0.5 * h);
    const Eigen::Matrix2cd m1 = generator(t0 + h);
    const Eigen::Matrix2cd k1 = m0 * u;
    const Eigen::Matrix2cd k2 = mh * (u + 0.5 * h * k1);
    const Eigen::Matrix2cd k3 = mh * (u + 0.5 * h * k2);
    const Eigen::Matrix2cd k4 = m1 * (u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

ComplexMatrix to_rotating_frame(const AtomParams& p, double t, const ComplexMatrix& lab) {
  if (lab.rows() != 2 || lab.cols() != 2) throw std::invalid_argument("to_rotating_frame: expected 2x2");
  Eigen::Vector2cd phases(std::exp(kI * p.omega0 * t), std::exp(kI * p.omega1 * t));
  return phases.asDiagonal() * lab;
}

double rwa_error(const AtomParams& p, double t, int steps) {
  const ComplexMatrix exact = to_rotating_frame(p, t, integrate_full(p, t, steps));
  return align_phase(exact, rwa_propagator(p, t)).distance;
}

int rk4_steps_for(const AtomParams& p, double t, double step_frequency_product) {
  if (!(step_frequency_product > 0.0 && step_frequency_product < kMaxStepFrequency)) {
    throw std::invalid_argument("rk4_steps_for: product must lie in (0, 0.1)");
  }
  const double rate = fastest_rate(p);
  if (t <= 0.0 || rate == 0.0) return 1;
  return static_cast<int>(std::ceil(t * rate / step_frequency_product)) + 1;
}

RotationPulse pulse_for_rotation(double theta, double phi_target, double rabi) {
  if (!(rabi > 0.0)) throw std::invalid_argument("pulse_for_rotation: rabi must be > 0");
  if (!(theta >= 0.0)) throw std::invalid_argument("pulse_for_rotation: theta must be >= 0");
  double phase = std::fmod(phi_target - std::numbers::pi, kTwoPi);
  if (phase < 0.0) phase += kTwoPi;
  return {2.0 * theta / rabi, phase};
}

}  // namespace qdevsim
