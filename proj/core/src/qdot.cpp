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

#include "qdevsim/qdot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdevsim/gate_algebra.hpp"

namespace qdevsim {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

void require_dots(const PulseSchedule& s) {
  if (s.kind() != DeviceKind::QuantumDotPair) throw std::invalid_argument("schedule is not a quantum-dot schedule");
}

const char* dot_channel(int dot) {
  if (dot == 1) return "omega1";
  if (dot == 2) return "omega2";
  throw std::invalid_argument("dot index must be 1 or 2");
}

OperatorTriple conjugate(const OperatorTriple& ops, const ComplexMatrix& u) {
  const ComplexMatrix ud = u.adjoint();
  return {ud * ops[0] * u, ud * ops[1] * u, ud * ops[2] * u};
}

}  // namespace

ComplexMatrix build_h(const Vector3& omega1, const Vector3& omega2, double w) {
  ComplexMatrix h = w * sigma_dot_tau();
  const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int i = 0; i < 3; ++i) h += omega1[i] * sigma(axes[i]) + omega2[i] * tau(axes[i]);
  return 0.5 * h;
}

ComplexMatrix dot_segment_hamiltonian(const Segment& seg) {
  return build_h(seg.vector("omega1"), seg.vector("omega2"), seg.scalar("exchange"));
}

std::vector<IdentityCheck> sigma_tau_identities() {
  const ComplexMatrix one = identity(4);
  const ComplexMatrix st = sigma_dot_tau();
  const ComplexMatrix usw = swap_gate();
  const ComplexMatrix half = 0.5 * (one + st);
  const ComplexMatrix p1 = 0.25 * (3.0 * one + st);
  const ComplexMatrix p2 = 0.25 * (one - st);

  std::vector<IdentityCheck> out{
      {"((1 + s.t)/2)^2 = 1", max_abs(half * half - one)},
      {"(s.t)^2 + 2 s.t - 3 = 0", max_abs(st * st + 2.0 * st - 3.0 * one)},
      {"U_sw = (1 + s.t)/2", max_abs(usw - half)},
      {"U_sw^2 = 1", max_abs(usw * usw - one)},
      {"P1^2 = P1", max_abs(p1 * p1 - p1)},
      {"P2^2 = P2", max_abs(p2 * p2 - p2)},
      {"P1 P2 = 0", max_abs(p1 * p2)},
  };
  const char* names[3] = {"x", "y", "z"};
  const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int i = 0; i < 3; ++i) {
    out.push_back({std::string("U_sw sigma_") + names[i] + " U_sw = tau_" + names[i],
                   max_abs(usw * sigma(axes[i]) * usw - tau(axes[i]))});
    out.push_back({std::string("U_sw tau_") + names[i] + " U_sw = sigma_" + names[i],
                   max_abs(usw * tau(axes[i]) * usw - sigma(axes[i]))});
  }
  return out;
}

PulseSchedule exchange_schedule(double area, double duration) {
  PulseSchedule s(DeviceKind::QuantumDotPair);
  s.add(duration, {{"exchange", area / duration}});
  return s;
}

PulseSchedule rotation_schedule(double theta, double phi, int dot, double duration) {
  const double rate = 2.0 * theta / duration;
  PulseSchedule s(DeviceKind::QuantumDotPair);
  s.add(duration, {{dot_channel(dot), Vector3(rate * std::cos(phi), rate * std::sin(phi), 0.0)}});
  return s;
}

PulseSchedule z_schedule(double area, int dot, double duration) {
  PulseSchedule s(DeviceKind::QuantumDotPair);
  s.add(duration, {{dot_channel(dot), Vector3(0.0, 0.0, area / duration)}});
  return s;
}

ComplexMatrix evolve_schedule(const PulseSchedule& s) {
  require_dots(s);
  return time_ordered_product(s, dot_segment_hamiltonian, 4);
}

ComplexMatrix exchange_closed_form(double area) {
  const double p = 0.5 * area;
  return std::exp(kI * p) * (std::cos(2.0 * p) * identity(4) - kI * std::sin(2.0 * p) * swap_gate());
}

PulseSchedule qpi_schedule() {
  return exchange_schedule(kPi / 4.0)
      .then(z_schedule(-kPi, 1))
      .then(exchange_schedule(kPi / 4.0))
      .then(z_schedule(-kPi / 2.0, 2))
      .then(z_schedule(kPi / 2.0, 1));
}

ComplexMatrix qpi_sequence() { return evolve_schedule(qpi_schedule()); }

OperatorTriple sigma_triple() { return {sigma(Axis::X), sigma(Axis::Y), sigma(Axis::Z)}; }

OperatorTriple tau_triple() { return {tau(Axis::X), tau(Axis::Y), tau(Axis::Z)}; }

OperatorTriple cross(const OperatorTriple& a, const OperatorTriple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

OperatorTriple cross(const Vector3& a, const OperatorTriple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<HeisenbergFrame> heisenberg_evolve(const PulseSchedule& s, const std::vector<double>& times) {
  require_dots(s);
  const double total = s.total_duration();
  const OperatorTriple s0 = sigma_triple();
  const OperatorTriple t0 = tau_triple();
  std::vector<HeisenbergFrame> frames;
  frames.reserve(times.size());
  for (double t : times) {
    if (t < 0.0 || t > total * (1.0 + 1e-12)) throw std::invalid_argument("sample time outside the schedule");
    const ComplexMatrix u = evolve_schedule(s.truncated(t));
    frames.push_back({t, conjugate(s0, u), conjugate(t0, u)});
  }
  return frames;
}

HeisenbergFrame heisenberg_exchange_closed_form(double varphi) {
  const OperatorTriple s0 = sigma_triple();
  const OperatorTriple t0 = tau_triple();
  const OperatorTriple st = cross(s0, t0);
  const double c = std::cos(varphi);
  const double sn = std::sin(varphi);
  HeisenbergFrame f;
  for (int i = 0; i < 3; ++i) {
    const ComplexMatrix mean = 0.5 * (s0[i] + t0[i]);
    const ComplexMatrix diff = 0.5 * (s0[i] - t0[i]);
    f.sigma[i] = mean + c * diff - 0.5 * sn * st[i];
    f.tau[i] = mean - c * diff + 0.5 * sn * st[i];
  }
  return f;
}

HeisenbergResidual heisenberg_residual(const PulseSchedule& s, const std::vector<double>& times, double step) {
  require_dots(s);
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  HeisenbergResidual out;
  for (const Segment& seg : s.segments()) {
    const ComplexMatrix h = dot_segment_hamiltonian(seg);
    out.hamiltonian_norm = std::max(out.hamiltonian_norm, h.jacobiSvd().singularValues()(0));
  }

  for (double t : times) {
    double start = 0.0;
    const Segment* active = nullptr;
    for (const Segment& seg : s.segments()) {
      if (t - step >= start && t + step <= start + seg.duration) {
        active = &seg;
        break;
      }
      start += seg.duration;
    }
    if (!active) throw std::invalid_argument("sample time too close to a segment boundary");

    const auto frames = heisenberg_evolve(s, {t - step, t, t + step});
    const HeisenbergFrame& lo = frames[0];
    const HeisenbergFrame& mid = frames[1];
    const HeisenbergFrame& hi = frames[2];
    const Vector3 o1 = active->vector("omega1");
    const Vector3 o2 = active->vector("omega2");
    const double w = active->scalar("exchange");
    const OperatorTriple st = cross(mid.sigma, mid.tau);
    const OperatorTriple rot1 = cross(o1, mid.sigma);
    const OperatorTriple rot2 = cross(o2, mid.tau);
    for (int i = 0; i < 3; ++i) {
      const ComplexMatrix ds = (hi.sigma[i] - lo.sigma[i]) / (2.0 * step);
      const ComplexMatrix dt = (hi.tau[i] - lo.tau[i]) / (2.0 * step);
      out.residual = std::max(out.residual, (ds - (rot1[i] - w * st[i])).norm());
      out.residual = std::max(out.residual, (dt - (rot2[i] + w * st[i])).norm());
    }
  }
  return out;
}

ComplexMatrix dyson_propagator(const PulseSchedule& s, int order) {
  require_dots(s);
  return dyson_series(s, dot_segment_hamiltonian, 4, order);
}

double max_deviation(const OperatorTriple& a, const OperatorTriple& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, max_abs(a[i] - b[i]));
  return worst;
}

}  // namespace qdevsim
