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

#include "qdevsim/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdevsim {

namespace {

const std::map<std::string, DeviceKind>& kind_names() {
  static const std::map<std::string, DeviceKind> names{
      {"atom", DeviceKind::TwoLevelAtom},  {"cavity", DeviceKind::CavityQED},
      {"ion_cz", DeviceKind::IonTrapCZ},   {"ion_sm", DeviceKind::IonTrapSM},
      {"ion_jp", DeviceKind::IonTrapJP},   {"dots", DeviceKind::QuantumDotPair},
  };
  return names;
}

void check_segment(DeviceKind kind, const Segment& seg) {
  if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
    throw std::invalid_argument("segment duration must be positive and finite");
  }
  const auto& allowed = channel_set(kind);
  for (const auto& [name, value] : seg.channels) {
    const auto it = allowed.find(name);
    if (it == allowed.end()) {
      throw std::invalid_argument("channel '" + name + "' is not defined for device " + device_kind_name(kind));
    }
    const bool is_vector = std::holds_alternative<Vector3>(value);
    if (is_vector != (it->second == ChannelShape::Vector)) {
      throw std::invalid_argument("channel '" + name + "' has the wrong value shape");
    }
    const bool finite = is_vector ? std::get<Vector3>(value).allFinite() : std::isfinite(std::get<double>(value));
    if (!finite) throw std::invalid_argument("channel '" + name + "' is not finite");
  }
}

}  // namespace

std::string device_kind_name(DeviceKind kind) {
  for (const auto& [name, k] : kind_names())
    if (k == kind) return name;
  throw std::logic_error("unnamed device kind");
}

DeviceKind parse_device_kind(const std::string& name) {
  const auto it = kind_names().find(name);
  if (it == kind_names().end()) throw std::invalid_argument("unknown device kind '" + name + "'");
  return it->second;
}

const std::map<std::string, ChannelShape>& channel_set(DeviceKind kind) {
  using S = ChannelShape;
  static const std::map<std::string, ChannelShape> atom{{"rabi", S::Scalar}, {"phase", S::Scalar}};
  static const std::map<std::string, ChannelShape> cavity{{"coupling", S::Scalar}};
  static const std::map<std::string, ChannelShape> cz{
      {"red1", S::Scalar}, {"red2", S::Scalar}, {"aux1", S::Scalar}, {"aux2", S::Scalar}};
  static const std::map<std::string, ChannelShape> sm{{"sm", S::Scalar}};
  static const std::map<std::string, ChannelShape> jp{{"jp", S::Scalar}};
  static const std::map<std::string, ChannelShape> dots{
      {"omega1", S::Vector}, {"omega2", S::Vector}, {"exchange", S::Scalar}};
  switch (kind) {
    case DeviceKind::TwoLevelAtom:
      return atom;
    case DeviceKind::CavityQED:
      return cavity;
    case DeviceKind::IonTrapCZ:
      return cz;
    case DeviceKind::IonTrapSM:
      return sm;
    case DeviceKind::IonTrapJP:
      return jp;
    case DeviceKind::QuantumDotPair:
      return dots;
  }
  throw std::logic_error("unhandled device kind");
}

double Segment::scalar(const std::string& name) const {
  const auto it = channels.find(name);
  return it == channels.end() ? 0.0 : std::get<double>(it->second);
}

Vector3 Segment::vector(const std::string& name) const {
  const auto it = channels.find(name);
  return it == channels.end() ? Vector3::Zero() : std::get<Vector3>(it->second);
}

double PulseSchedule::total_duration() const {
  double total = 0.0;
  for (const Segment& s : segments_) total += s.duration;
  return total;
}

PulseSchedule& PulseSchedule::add(Segment segment) {
  check_segment(kind_, segment);
  segments_.push_back(std::move(segment));
  return *this;
}

PulseSchedule& PulseSchedule::add(double duration, std::map<std::string, ChannelValue> channels) {
  return add(Segment{duration, std::move(channels)});
}

PulseSchedule PulseSchedule::then(const PulseSchedule& later) const {
  if (later.kind_ != kind_) throw std::invalid_argument("cannot concatenate schedules of different devices");
  PulseSchedule out = *this;
  for (const Segment& s : later.segments_) out.segments_.push_back(s);
  return out;
}

PulseSchedule PulseSchedule::truncated(double t) const {
  if (t < 0.0) throw std::invalid_argument("truncation time must be >= 0");
  PulseSchedule out(kind_);
  double elapsed = 0.0;
  for (const Segment& s : segments_) {
    const double remaining = t - elapsed;
    if (remaining <= 0.0) break;
    Segment piece = s;
    piece.duration = std::min(s.duration, remaining);
    out.segments_.push_back(std::move(piece));
    elapsed += s.duration;
  }
  return out;
}

ChannelValue pulse_area(const PulseSchedule& s, const std::string& channel) {
  const auto& allowed = channel_set(s.kind());
  const auto it = allowed.find(channel);
  if (it == allowed.end()) throw std::invalid_argument("unknown channel '" + channel + "'");
  if (it->second == ChannelShape::Vector) {
    Vector3 area = Vector3::Zero();
    for (const Segment& seg : s.segments()) area += seg.duration * seg.vector(channel);
    return area;
  }
  double area = 0.0;
  for (const Segment& seg : s.segments()) area += seg.duration * seg.scalar(channel);
  return area;
}

namespace {

ComplexMatrix checked_hamiltonian(const SegmentHamiltonian& hamiltonian, const Segment& seg, Eigen::Index dim) {
  ComplexMatrix h = hamiltonian(seg);
  if (h.rows() != dim || h.cols() != dim) throw std::invalid_argument("segment Hamiltonian has the wrong dimension");
  if (!is_hermitian(h, tol::kPropagation)) throw std::invalid_argument("segment Hamiltonian is not Hermitian");
  return h;
}

}  // namespace

ComplexMatrix time_ordered_product(const PulseSchedule& s, const SegmentHamiltonian& hamiltonian,
                                   Eigen::Index dim) {
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const Segment& seg : s.segments()) {
    u = expm(checked_hamiltonian(hamiltonian, seg, dim), -kI * seg.duration) * u;
  }
  return u;
}

ComplexMatrix dyson_series(const PulseSchedule& s, const SegmentHamiltonian& hamiltonian, Eigen::Index dim,
                           int order) {
  if (order < 0 || order > 8) throw std::invalid_argument("Dyson order must be in [0, 8]");
  // terms[m] holds the order-m part of the propagator accumulated so far.
  std::vector<ComplexMatrix> terms(static_cast<std::size_t>(order) + 1, ComplexMatrix::Zero(dim, dim));
  terms[0] = ComplexMatrix::Identity(dim, dim);
  for (const Segment& seg : s.segments()) {
    const ComplexMatrix step = -kI * seg.duration * checked_hamiltonian(hamiltonian, seg, dim);
    std::vector<ComplexMatrix> powers{ComplexMatrix::Identity(dim, dim)};
    for (int j = 1; j <= order; ++j) powers.push_back(step * powers.back() / static_cast<double>(j));
    std::vector<ComplexMatrix> next(terms.size(), ComplexMatrix::Zero(dim, dim));
    for (int m = 0; m <= order; ++m)
      for (int j = 0; j <= m; ++j) next[m] += powers[j] * terms[m - j];
    terms = std::move(next);
  }
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& t : terms) u += t;
  return u;
}

}  // namespace qdevsim
