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

#include <algorithm>

#include "qdevsim/device.hpp"
#include "qdevsim/gate_algebra.hpp"
#include "qdevsim/qdot.hpp"
#include "qdevsim/schedule.hpp"
#include "support/oracles.hpp"

namespace qdevsim {
namespace {

using oracle::kPi;

TEST(PulseSchedule, RejectsBadSegments) {
  PulseSchedule s(DeviceKind::QuantumDotPair);
  EXPECT_THROW(s.add(0.0, {{"exchange", 1.0}}), std::invalid_argument);
  EXPECT_THROW(s.add(-1.0, {}), std::invalid_argument);
  EXPECT_THROW(s.add(1.0, {{"rabi", 1.0}}), std::invalid_argument);
  EXPECT_THROW(s.add(1.0, {{"exchange", Vector3(1, 0, 0)}}), std::invalid_argument);
  EXPECT_THROW(s.add(1.0, {{"omega1", 1.0}}), std::invalid_argument);
  EXPECT_TRUE(s.empty());
}

TEST(PulseArea, Examples) {
  PulseSchedule empty(DeviceKind::QuantumDotPair);
  EXPECT_EQ(std::get<double>(pulse_area(empty, "exchange")), 0.0);

  PulseSchedule two(DeviceKind::QuantumDotPair);
  two.add(1.0, {{"exchange", kPi / 4.0}}).add(1.0, {{"exchange", kPi / 4.0}});
  EXPECT_NEAR(std::get<double>(pulse_area(two, "exchange")), kPi / 2.0, 1e-15);

  const Vector3 z1 = std::get<Vector3>(pulse_area(qpi_schedule(), "omega1"));
  EXPECT_NEAR(z1.z(), -kPi / 2.0, 1e-15);
  EXPECT_EQ(z1.x(), 0.0);
  EXPECT_THROW(pulse_area(two, "nope"), std::invalid_argument);
}

TEST(PulseSchedule, TruncateAndConcatenate) {
  PulseSchedule s(DeviceKind::QuantumDotPair);
  s.add(1.0, {{"exchange", 1.0}}).add(2.0, {{"exchange", 2.0}});
  const PulseSchedule cut = s.truncated(1.5);
  ASSERT_EQ(cut.segments().size(), 2u);
  EXPECT_NEAR(cut.total_duration(), 1.5, 1e-15);
  EXPECT_EQ(s.then(cut).segments().size(), 4u);
  EXPECT_THROW(s.then(PulseSchedule(DeviceKind::TwoLevelAtom)), std::invalid_argument);
}

TEST(Propagate, EmptyScheduleIsIdentity) {
  const DeviceModel dots = QuantumDotPair{};
  EXPECT_EQ(propagate(dots, PulseSchedule(DeviceKind::QuantumDotPair)), identity(4));
  const DeviceModel cz = IonTrapCZ{};
  EXPECT_EQ(propagate(cz, PulseSchedule(DeviceKind::IonTrapCZ)), identity(36));
}

TEST(Propagate, ExchangeHalfPiIsSwap) {
  const DeviceModel dots = QuantumDotPair{};
  EXPECT_LT(phase_distance(propagate(dots, exchange_schedule(kPi / 2.0)), oracle::swap4()), 1e-12);
}

TEST(Propagate, SplittingSegmentsChangesNothing) {
  const DeviceModel dots = QuantumDotPair{};
  Segment seg{2.0, {{"omega1", Vector3(0.3, -0.2, 0.5)}, {"exchange", 0.9}}};
  PulseSchedule whole(DeviceKind::QuantumDotPair);
  whole.add(seg);
  PulseSchedule split(DeviceKind::QuantumDotPair);
  for (int k = 0; k < 10; ++k) split.add(0.2, seg.channels);
  EXPECT_LT((propagate(dots, whole) - propagate(dots, split)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Propagate, TimeOrderingMatters) {
  const DeviceModel dots = QuantumDotPair{};
  const PulseSchedule x = rotation_schedule(0.7, 0.0);
  const PulseSchedule ex = exchange_schedule(0.9);
  const ComplexMatrix forward = propagate(dots, x.then(ex));
  EXPECT_LT((forward - propagate(dots, ex) * propagate(dots, x)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_GT(phase_distance(forward, propagate(dots, ex.then(x))), 1e-6);
}

TEST(Propagate, DeviceMismatchAndBadChannels) {
  const DeviceModel dots = QuantumDotPair{};
  PulseSchedule atom(DeviceKind::TwoLevelAtom);
  atom.add(1.0, {{"rabi", 1.0}});
  EXPECT_THROW(propagate(dots, atom), std::invalid_argument);
  EXPECT_THROW(segment_hamiltonian(dots, Segment{1.0, {{"rabi", 1.0}}}), std::invalid_argument);
}

TEST(TimeOrderedProduct, RejectsNonHermitianGenerator) {
  PulseSchedule s(DeviceKind::QuantumDotPair);
  s.add(1.0, {});
  const auto bad = [](const Segment&) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 1) = 1.0;
    return m;
  };
  EXPECT_THROW(time_ordered_product(s, bad, 4), std::invalid_argument);
  EXPECT_THROW(time_ordered_product(s, [](const Segment&) { return identity(2); }, 4), std::invalid_argument);
}

/// Random schedule for any device, built from the device's channel set.
PulseSchedule random_schedule(DeviceKind kind, oracle::Generator& gen) {
  PulseSchedule s(kind);
  const int segments = 1 + static_cast<int>(gen.uniform(0.0, 4.0));
  for (int k = 0; k < segments; ++k) {
    std::map<std::string, ChannelValue> channels;
    for (const auto& [name, shape] : channel_set(kind)) {
      if (gen.uniform(0.0, 1.0) < 0.4) continue;
      if (shape == ChannelShape::Vector) {
        channels[name] = Vector3(gen.normal(), gen.normal(), gen.normal());
      } else if (kind == DeviceKind::CavityQED) {
        channels[name] = gen.uniform(0.0, 0.5);
      } else {
        channels[name] = gen.normal();
      }
    }
    s.add(gen.uniform(0.05, 2.0), channels);
  }
  return s;
}

TEST(Propagate, UnitaryForRandomSchedulesOnEveryDevice) {
  JPParams jp;
  jp.modes = {{0.1, 0.2, 2.0}};
  const std::vector<DeviceModel> devices{TwoLevelAtom{}, CavityQED{}, IonTrapCZ{},
                                         IonTrapSM{},    IonTrapJP{jp}, QuantumDotPair{}};
  oracle::Generator gen(61);
  for (const DeviceModel& d : devices) {
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix u = propagate(d, random_schedule(device_kind(d), gen));
      EXPECT_TRUE(is_unitary(u, tol::kPropagation)) << device_kind_name(device_kind(d));
    }
  }
}

TEST(DeviceKind, NamesRoundTrip) {
  for (DeviceKind k : {DeviceKind::TwoLevelAtom, DeviceKind::CavityQED, DeviceKind::IonTrapCZ, DeviceKind::IonTrapSM,
                       DeviceKind::IonTrapJP, DeviceKind::QuantumDotPair}) {
    EXPECT_EQ(parse_device_kind(device_kind_name(k)), k);
  }
  EXPECT_THROW(parse_device_kind("squid"), std::invalid_argument);
}

TEST(Propagate, CavityCouplingChannel) {
  CavityParams p;
  p.g = 0.0;
  const DeviceModel cavity = CavityQED{p};
  PulseSchedule s(DeviceKind::CavityQED);
  s.add(2.0, {{"coupling", 0.05}});
  CavityParams q = p;
  q.g = 0.05;
  EXPECT_LT((propagate(cavity, s) - expm(build_hamiltonian(q), -kI * 2.0)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Propagate, CiracZollerScheduleMatchesClosedForm) {
  const IonTrapParams p;
  const double t = p.pulse_time();
  PulseSchedule s(DeviceKind::IonTrapCZ);
  s.add(t, {{"red1", 1.0}}).add(2.0 * t, {{"aux2", 1.0}}).add(t, {{"red1", 1.0}});
  EXPECT_LT((propagate(IonTrapCZ{p}, s) - cirac_zoller_gate(p).full).cwiseAbs().maxCoeff(), 1e-10);
}

}  // namespace
}  // namespace qdevsim
