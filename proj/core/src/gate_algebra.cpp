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

#include "qdevsim/gate_algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdevsim {

namespace {

constexpr double kPi = std::numbers::pi;

void require_qubit_count(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("qubit count must be in [1, 16], got " + std::to_string(n));
}

void require_slot(int slot, int n) {
  if (slot < 1 || slot > n) {
    throw std::invalid_argument("slot " + std::to_string(slot) + " out of range [1, " + std::to_string(n) + "]");
  }
}

int bit_of(Eigen::Index index, int slot, int n) { return static_cast<int>((index >> (n - slot)) & 1); }

}  // namespace

ComplexMatrix pauli(Axis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case Axis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case Axis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

ComplexMatrix sigma(Axis axis) { return kron(pauli(axis), identity(2)); }

ComplexMatrix tau(Axis axis) { return kron(identity(2), pauli(axis)); }

ComplexMatrix sigma_dot_tau() {
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) out += sigma(a) * tau(a);
  return out;
}

ComplexMatrix rotation_gate(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix m(2, 2);
  m << c, -kI * std::exp(-kI * phi) * s,
       -kI * std::exp(kI * phi) * s, c;
  return m;
}

ComplexMatrix rotation_gate_conjugate_convention(double theta, double phi) {
  return rotation_gate(theta, -phi);
}

ComplexMatrix phase_gate(double eta) {
  ComplexMatrix m = identity(4);
  m(3, 3) = std::exp(kI * eta);
  return m;
}

ComplexMatrix controlled_gate(const ComplexMatrix& u, int m) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("controlled_gate: U must be 2x2");
  if (!is_unitary(u, tol::kConstruction)) throw std::invalid_argument("controlled_gate: U is not unitary");
  if (m < 0 || m > 15) throw std::invalid_argument("controlled_gate: control count out of range");
  const Eigen::Index dim = Eigen::Index{1} << (m + 1);
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  out.bottomRightCorner(2, 2) = u;
  return out;
}

ComplexMatrix embed_1bit(const ComplexMatrix& a, int slot, int n) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("embed_1bit: operator must be 2x2");
  require_qubit_count(n);
  require_slot(slot, n);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 1; s <= n; ++s) out = kron(out, s == slot ? a : identity(2));
  return out;
}

ComplexMatrix embed_2bit(const ComplexMatrix& b, int j, int k, int n) {
  if (b.rows() != 4 || b.cols() != 4) throw std::invalid_argument("embed_2bit: operator must be 4x4");
  require_qubit_count(n);
  require_slot(j, n);
  require_slot(k, n);
  if (j == k) throw std::invalid_argument("embed_2bit: slots must differ");

  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index pair_mask = (Eigen::Index{1} << (n - j)) | (Eigen::Index{1} << (n - k));
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int in = 2 * bit_of(col, j, n) + bit_of(col, k, n);
    const Eigen::Index rest = col & ~pair_mask;
    for (int out_pair = 0; out_pair < 4; ++out_pair) {
      Eigen::Index row = rest;
      if (out_pair & 2) row |= Eigen::Index{1} << (n - j);
      if (out_pair & 1) row |= Eigen::Index{1} << (n - k);
      out(row, col) = b(out_pair, in);
    }
  }
  return out;
}

ComplexMatrix swap_gate() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

ComplexMatrix sqrt_swap(Sign sign) {
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  const Complex prefactor = std::exp(s * kI * (kPi / 4.0)) / std::sqrt(2.0);
  return prefactor * (identity(4) - s * kI * swap_gate());
}

FidelityReport verify_cnot_decomposition() {
  const ComplexMatrix composite = embed_1bit(rotation_gate(kPi / 4.0, kPi / 2.0), 2, 2) * phase_gate(kPi) *
                                  embed_1bit(rotation_gate(kPi / 4.0, -kPi / 2.0), 2, 2);
  return make_report(composite, GateSpec::controlled(GateSpec::pauli(Axis::X), 1), "ideal",
                     "cnot_decomposition");
}

bool is_imprimitive(const ComplexMatrix& v, double tol) {
  if (v.rows() != 4 || v.cols() != 4) throw std::invalid_argument("is_imprimitive: expected a 4x4 gate");
  if (!is_unitary(v, 1e-8)) throw std::invalid_argument("is_imprimitive: gate is not unitary");
  return realignment_rank(v, tol) > 1 && realignment_rank(v * swap_gate(), tol) > 1;
}

ComplexMatrix xor_gate() {
  const ComplexMatrix root = sqrt_swap(Sign::Minus);
  const ComplexMatrix sz = sigma(Axis::Z);
  const ComplexMatrix tz = tau(Axis::Z);
  return expm(sz, kI * (kPi / 4.0)) * expm(tz, -kI * (kPi / 4.0)) * root * expm(sz, kI * (kPi / 2.0)) * root;
}

}  // namespace qdevsim
