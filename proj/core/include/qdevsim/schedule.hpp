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

// Piecewise-constant pulse schedules and their time-ordered propagation.

#ifndef QDEVSIM_SCHEDULE_HPP
#define QDEVSIM_SCHEDULE_HPP

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qdevsim/linalg.hpp"

namespace qdevsim {

enum class DeviceKind { TwoLevelAtom, CavityQED, IonTrapCZ, IonTrapSM, IonTrapJP, QuantumDotPair };

std::string device_kind_name(DeviceKind kind);
/// Inverse of device_kind_name. Throws std::invalid_argument on an unknown name.
DeviceKind parse_device_kind(const std::string& name);

using Vector3 = Eigen::Vector3d;
using ChannelValue = std::variant<double, Vector3>;

enum class ChannelShape { Scalar, Vector };

/// Channel names a device accepts, with their value shapes.
const std::map<std::string, ChannelShape>& channel_set(DeviceKind kind);

struct Segment {
  double duration = 0.0;
  std::map<std::string, ChannelValue> channels;

  /// Scalar channel value, 0 when absent.
  double scalar(const std::string& name) const;
  /// Vector channel value, zero when absent.
  Vector3 vector(const std::string& name) const;
};

class PulseSchedule {
 public:
  explicit PulseSchedule(DeviceKind kind) : kind_(kind) {}

  DeviceKind kind() const { return kind_; }
  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  double total_duration() const;

  /// Appends a segment after checking its duration and channels.
  /// Throws std::invalid_argument on a non-positive duration, an unknown
  /// channel or a value of the wrong shape.
  PulseSchedule& add(Segment segment);
  PulseSchedule& add(double duration, std::map<std::string, ChannelValue> channels);

  /// Concatenation: the segments of `later` run after those of this schedule.
  PulseSchedule then(const PulseSchedule& later) const;

  /// The schedule restricted to [0, t], splitting the segment that straddles t.
  PulseSchedule truncated(double t) const;

 private:
  DeviceKind kind_;
  std::vector<Segment> segments_;
};

/// Sum of duration * value over segments. Throws std::invalid_argument if the
/// channel is not part of the device's channel set.
ChannelValue pulse_area(const PulseSchedule& s, const std::string& channel);

using SegmentHamiltonian = std::function<ComplexMatrix(const Segment&)>;

/// U_K ... U_2 U_1 with U_k = exp(-i H_k duration_k). Throws
/// std::invalid_argument if an assembled H is not Hermitian to 1e-10 or has
/// the wrong dimension.
ComplexMatrix time_ordered_product(const PulseSchedule& s, const SegmentHamiltonian& hamiltonian,
                                   Eigen::Index dim);

/// Dyson series truncated at total order `order` in H. Each constant segment
/// contributes the exact terms (-i H d)^j / j!, so the result is the nested
/// time-ordered integral series evaluated without quadrature error.
/// Throws std::invalid_argument unless 0 <= order <= 8.
ComplexMatrix dyson_series(const PulseSchedule& s, const SegmentHamiltonian& hamiltonian, Eigen::Index dim,
                           int order);

}  // namespace qdevsim

#endif  // QDEVSIM_SCHEDULE_HPP
