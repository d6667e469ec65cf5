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

#include <gtest/gtest.h>

#include "qdevsim/atom.hpp"
#include "qdevsim/gate_algebra.hpp"
#include "support/oracles.hpp"

namespace qdevsim {
namespace {

using oracle::kPi;

/// Rotating-frame equation with the counter-rotating term dropped.
oracle::Matrix rwa_hamiltonian(const AtomParams& p, double t) {
  const double delta = p.detuning();
  oracle::Matrix h = oracle::Matrix::Zero(2, 2);
  h(0, 1) = -0.5 * p.rabi * std::exp(-kI * p.phi) * std::exp(-kI * delta * t);
  h(1, 0) = std::conj(h(0, 1));
  return h;
}

TEST(RwaPropagator, IdentityAtTimeZero) {
  AtomParams p;
  p.rabi = 0.4;
  p.nu = 0.8;
  EXPECT_LT((rwa_propagator(p, 0.0) - identity(2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RwaPropagator, ResonantPiPulse) {
  const double phi = 0.37;
  const AtomParams p = AtomParams::resonant(5.0, 2.0, phi);
  const StateVector out = rwa_propagator(p, kPi / 2.0) * basis_state(2, 0);
  EXPECT_NEAR(std::abs(out(0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out(1) - kI * std::exp(kI * phi)), 0.0, 1e-15);
}

TEST(RwaPropagator, HalfPiPulseIsRotationWithShiftedPhase) {
  oracle::Generator gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    const double phi0 = gen.angle();
    const AtomParams p = AtomParams::resonant(3.0, 1.5, phi0);
    EXPECT_LT((rwa_propagator(p, kPi / (2.0 * 1.5)) - rotation_gate(kPi / 4.0, phi0 + kPi)).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(RwaPropagator, DetunedMatchesIntegratedRwaEquation) {
  oracle::Generator gen(32);
  for (int trial = 0; trial < 8; ++trial) {
    AtomParams p;
    p.omega0 = gen.uniform(-1.0, 1.0);
    p.omega1 = p.omega0 + gen.uniform(1.0, 3.0);
    p.nu = p.transition() + gen.uniform(-0.5, 0.5);
    p.rabi = gen.uniform(0.1, 1.0);
    p.phi = gen.angle();
    const double t = gen.uniform(0.5, 4.0);
    const oracle::Matrix expected =
        oracle::rk4_propagator([&](double s) { return rwa_hamiltonian(p, s); }, 2, t, 4000);
    EXPECT_LT((rwa_propagator(p, t) - expected).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(RwaPropagator, ResonantDeterminantIsOne) {
  oracle::Generator gen(33);
  for (int trial = 0; trial < 20; ++trial) {
    const AtomParams p = AtomParams::resonant(2.0, gen.uniform(0.1, 2.0), gen.angle());
    EXPECT_NEAR(std::abs(rwa_propagator(p, gen.uniform(0.0, 20.0)).determinant() - Complex(1.0)), 0.0, 1e-13);
  }
}

TEST(RwaPropagator, RejectsNegativeTime) {
  EXPECT_THROW(rwa_propagator(AtomParams{}, -1.0), std::invalid_argument);
  AtomParams bad;
  bad.rabi = -1.0;
  EXPECT_THROW(rwa_propagator(bad, 1.0), std::invalid_argument);
}

TEST(EffectiveHamiltonian, GeneratesResonantPropagator) {
  oracle::Generator gen(34);
  for (int trial = 0; trial < 20; ++trial) {
    const double rabi = gen.uniform(0.1, 3.0), phi = gen.angle(), t = gen.uniform(0.0, 5.0);
    const ComplexMatrix u = oracle::expm_taylor(effective_hamiltonian(rabi, phi), -kI * t);
    EXPECT_LT((u - rwa_propagator(AtomParams::resonant(7.0, rabi, phi), t)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(EffectiveHamiltonian, PrintedFormCorrespondsToNegatedPhase) {
  // -(W/2)[e^{-i phi}|1><0| + e^{i phi}|0><1|] generates the propagator of drive phase -phi.
  const double rabi = 0.9, phi = 0.6, t = 1.3;
  oracle::Matrix printed = oracle::Matrix::Zero(2, 2);
  printed(1, 0) = -0.5 * rabi * std::exp(-kI * phi);
  printed(0, 1) = -0.5 * rabi * std::exp(kI * phi);
  const ComplexMatrix u = oracle::expm_taylor(printed, -kI * t);
  EXPECT_LT((u - rwa_propagator(AtomParams::resonant(1.0, rabi, -phi), t)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT((u - rwa_propagator(AtomParams::resonant(1.0, rabi, phi), t)).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(IntegrateFull, DecoupledPhases) {
  AtomParams p;
  p.omega0 = 0.3;
  p.omega1 = 1.7;
  p.nu = 1.4;
  p.rabi = 0.0;
  const double t = 2.5;
  const ComplexMatrix u = integrate_full(p, t, rk4_steps_for(p, t, 0.002));
  EXPECT_NEAR(std::abs(u(0, 0) - std::exp(-kI * 0.3 * t)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(u(1, 1) - std::exp(-kI * 1.7 * t)), 0.0, 1e-10);
  EXPECT_EQ(std::abs(u(0, 1)), 0.0);
}

TEST(IntegrateFull, MatchesIndependentIntegrator) {
  AtomParams p;
  p.omega0 = 0.0;
  p.omega1 = 4.0;
  p.nu = 4.2;
  p.rabi = 0.7;
  p.phi = 0.4;
  const double t = 3.0;
  const auto lab = [&](double s) {
    oracle::Matrix h(2, 2);
    const double drive = std::cos(p.nu * s);
    h << p.omega0, -p.rabi * std::exp(-kI * p.phi) * drive, -p.rabi * std::exp(kI * p.phi) * drive, p.omega1;
    return h;
  };
  const oracle::Matrix expected = oracle::rk4_propagator(lab, 2, t, 20000);
  EXPECT_LT((integrate_full(p, t, rk4_steps_for(p, t, 0.005)) - expected).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(IntegrateFull, PreservesNorm) {
  AtomParams p = AtomParams::resonant(20.0, 1.0, 0.2);
  const double t = kPi;
  const ComplexMatrix u = integrate_full(p, t, rk4_steps_for(p, t));
  oracle::Generator gen(35);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector psi(2);
    psi << Complex(gen.normal(), gen.normal()), Complex(gen.normal(), gen.normal());
    psi.normalize();
    EXPECT_NEAR((u * psi).norm(), 1.0, 1e-8);
  }
}

TEST(IntegrateFull, StepBoundEnforced) {
  AtomParams p = AtomParams::resonant(10.0, 1.0, 0.0);
  EXPECT_THROW(integrate_full(p, 1.0, 50), std::invalid_argument);
  EXPECT_NO_THROW(integrate_full(p, 1.0, 101));
}

TEST(RwaError, ShrinksWithDriveFrequency) {
  const double rabi = 1.0;
  const double t = kPi / rabi;
  double previous = 1.0;
  for (double ratio : {10.0, 100.0, 1000.0}) {
    const AtomParams p = AtomParams::resonant(ratio * rabi, rabi, 0.3);
    const double err = rwa_error(p, t, rk4_steps_for(p, t));
    EXPECT_LT(err, previous);
    previous = err;
  }
  EXPECT_LT(previous, 0.005);
}

TEST(RwaError, BoundsAtTwoRatios) {
  const double t = kPi;
  const AtomParams p100 = AtomParams::resonant(100.0, 1.0, 0.0);
  EXPECT_LT(rwa_error(p100, t, rk4_steps_for(p100, t)), 0.05);
}

TEST(PulseForRotation, Examples) {
  const RotationPulse zero = pulse_for_rotation(0.0, 0.4, 1.0);
  EXPECT_EQ(zero.duration, 0.0);
  EXPECT_LT((rwa_propagator(AtomParams::resonant(1.0, 1.0, zero.phase), zero.duration) - identity(2))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);

  const RotationPulse flip = pulse_for_rotation(kPi / 2.0, 0.0, 2.0 * kPi);
  EXPECT_NEAR(flip.duration, 0.5, 1e-15);
  const ComplexMatrix u = rwa_propagator(AtomParams::resonant(50.0, 2.0 * kPi, flip.phase), flip.duration);
  EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0)), 1.0, 1e-15);
}

TEST(PulseForRotation, RealizesTargetRotation) {
  oracle::Generator gen(36);
  for (int trial = 0; trial < 30; ++trial) {
    const double theta = gen.uniform(0.0, kPi), phi = gen.angle(), rabi = gen.uniform(0.2, 3.0);
    const RotationPulse pulse = pulse_for_rotation(theta, phi, rabi);
    EXPECT_GE(pulse.phase, 0.0);
    EXPECT_LT(pulse.phase, 2.0 * kPi);
    const ComplexMatrix u = rwa_propagator(AtomParams::resonant(10.0, rabi, pulse.phase), pulse.duration);
    EXPECT_LT(phase_distance(u, rotation_gate(theta, phi)), 1e-10);
  }
}

TEST(PulseForRotation, SameAxisPulsesCompose) {
  const double phi = 0.8, rabi = 1.1;
  const RotationPulse quarter = pulse_for_rotation(kPi / 4.0, phi, rabi);
  const RotationPulse half = pulse_for_rotation(kPi / 2.0, phi, rabi);
  const AtomParams p = AtomParams::resonant(5.0, rabi, quarter.phase);
  const ComplexMatrix twice = rwa_propagator(p, quarter.duration) * rwa_propagator(p, quarter.duration);
  EXPECT_LT((twice - rwa_propagator(p, half.duration)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(PulseForRotation, Errors) {
  EXPECT_THROW(pulse_for_rotation(1.0, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(pulse_for_rotation(-1.0, 0.0, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace qdevsim
