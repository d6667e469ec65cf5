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

// Ideal gates and the universality toolkit.
//
// Basis ordering: n-qubit kets |x1 x2 ... xn> are indexed lexicographically
// with slot 1 as the most significant bit. Slots are 1-based throughout.

#ifndef QDEVSIM_GATE_ALGEBRA_HPP
#define QDEVSIM_GATE_ALGEBRA_HPP

#include <array>

#include "qdevsim/gate_spec.hpp"
#include "qdevsim/linalg.hpp"
#include "qdevsim/report.hpp"

namespace qdevsim {

ComplexMatrix pauli(Axis axis);

/// sigma_axis (x) 1 and 1 (x) tau_axis on two qubits.
ComplexMatrix sigma(Axis axis);
ComplexMatrix tau(Axis axis);

/// The exchange operator sigma . tau = sum_axis sigma_axis tau_axis.
ComplexMatrix sigma_dot_tau();

/// [[cos t, -i e^{-i p} sin t], [-i e^{i p} sin t, cos t]], determinant 1.
ComplexMatrix rotation_gate(double theta, double phi);

/// The rotation matrix in the alternate phase convention where the upper-right
/// entry carries e^{+i phi}. Equal to rotation_gate(theta, -phi).
ComplexMatrix rotation_gate_conjugate_convention(double theta, double phi);

/// diag(1, 1, 1, e^{i eta}).
ComplexMatrix phase_gate(double eta);

/// m-bit-controlled U: identity except for U in the final 2x2 block.
/// Throws std::invalid_argument unless u is a unitary 2x2 and m >= 0.
ComplexMatrix controlled_gate(const ComplexMatrix& u, int m);

/// A acting on qubit `slot` of n, identity elsewhere.
ComplexMatrix embed_1bit(const ComplexMatrix& a, int slot, int n);

/// B acting on the ordered slot pair (j, k) of n qubits: the first tensor
/// factor of B addresses slot j, the second slot k.
ComplexMatrix embed_2bit(const ComplexMatrix& b, int j, int k, int n);

ComplexMatrix swap_gate();

/// (e^{+-i pi/4} / sqrt2)(1 -+ i U_sw); both branches square to U_sw.
ComplexMatrix sqrt_swap(Sign sign);

/// CNOT rebuilt as U_{pi/4,pi/2}(2) Q_pi U_{pi/4,-pi/2}(2) and compared with
/// controlled_gate(sigma_x, 1).
FidelityReport verify_cnot_decomposition();

/// True iff V is neither S (x) T nor (S (x) T) U_sw. Throws on non-unitary V.
bool is_imprimitive(const ComplexMatrix& v, double tol = 1e-8);

/// e^{i pi sz/4} e^{-i pi tz/4} sqrt_swap(-) e^{i pi sz/2} sqrt_swap(-).
/// Equals i * phase_gate(pi).
ComplexMatrix xor_gate();

}  // namespace qdevsim

#endif  // QDEVSIM_GATE_ALGEBRA_HPP
