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

#ifndef QDEVSIM_GATE_SPEC_HPP
#define QDEVSIM_GATE_SPEC_HPP

#include <memory>
#include <string>
#include <variant>

#include "qdevsim/linalg.hpp"

namespace qdevsim {

enum class Axis { X, Y, Z };

/// Branch of the swap square root: Plus is e^{+i pi/4}(1 - i U_sw)/sqrt2,
/// Minus is e^{-i pi/4}(1 + i U_sw)/sqrt2.
enum class Sign { Plus, Minus };

struct GateSpec;

namespace gate {
struct Rotation {
  double theta = 0.0;
  double phi = 0.0;
};
struct Phase {
  double eta = 0.0;
};
struct Controlled {
  std::shared_ptr<const GateSpec> inner;
  int controls = 1;
};
struct Swap {};
struct SqrtSwap {
  Sign sign = Sign::Plus;
};
struct Pauli {
  Axis axis = Axis::X;
};
struct Explicit {
  ComplexMatrix matrix;
};
}  // namespace gate

/// Symbolic ideal gate; the verification target of every simulation.
struct GateSpec {
  using Kind = std::variant<gate::Rotation, gate::Phase, gate::Controlled, gate::Swap,
                            gate::SqrtSwap, gate::Pauli, gate::Explicit>;
  Kind kind;

  static GateSpec rotation(double theta, double phi) { return {gate::Rotation{theta, phi}}; }
  static GateSpec phase(double eta) { return {gate::Phase{eta}}; }
  static GateSpec controlled(GateSpec inner, int controls) {
    return {gate::Controlled{std::make_shared<const GateSpec>(std::move(inner)), controls}};
  }
  static GateSpec swap() { return {gate::Swap{}}; }
  static GateSpec sqrt_swap(Sign sign) { return {gate::SqrtSwap{sign}}; }
  static GateSpec pauli(Axis axis) { return {gate::Pauli{axis}}; }
  static GateSpec explicit_matrix(ComplexMatrix m) { return {gate::Explicit{std::move(m)}}; }
};

/// Builds the unitary matrix the spec names. Throws std::invalid_argument for
/// a Controlled gate whose inner gate is not a unitary 2x2.
ComplexMatrix materialize(const GateSpec& spec);

/// Short human-readable label, e.g. "Phase(3.14159)".
std::string describe(const GateSpec& spec);

}  // namespace qdevsim

#endif  // QDEVSIM_GATE_SPEC_HPP
