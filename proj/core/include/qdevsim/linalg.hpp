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

#ifndef QDEVSIM_LINALG_HPP
#define QDEVSIM_LINALG_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qdevsim {

using Complex = std::complex<double>;

/// Dense square matrix of complex amplitudes. Carries every Hamiltonian,
/// propagator and gate in the library. Units: hbar = 1, angular frequencies.
using ComplexMatrix = Eigen::MatrixXcd;

/// Column of complex amplitudes.
using StateVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerance ladder shared by every module.
namespace tol {
inline constexpr double kConstruction = 1e-12;
inline constexpr double kPropagation = 1e-10;
inline constexpr double kApproximation = 1e-8;
}  // namespace tol

ComplexMatrix identity(std::size_t dim);

bool is_square(const ComplexMatrix& a);
bool is_finite(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Kronecker product with the first factor as the most significant index,
/// so kron(A, B)[(i,j),(k,l)] = A[i,k] B[j,l] with row index i*dim(B) + j.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Returns exp(scale * a).
///
/// Hermitian inputs (within 1e-10) go through an eigendecomposition, which
/// keeps exp(-i t H) unitary to machine precision. Everything else falls back
/// to Pade scaling-and-squaring. Throws std::invalid_argument on a non-square
/// or non-finite input.
ComplexMatrix expm(const ComplexMatrix& a, Complex scale);

/// Pade scaling-and-squaring path only, exposed so tests and benchmarks can
/// compare it against the spectral path.
ComplexMatrix expm_pade(const ComplexMatrix& a, Complex scale);

/// Result of aligning u to v modulo a global phase.
struct PhaseAlignment {
  double distance = 0.0;  ///< ||u - c v||_F / sqrt(dim)
  Complex phase{1.0, 0.0};  ///< the minimizing unit-modulus c
};

/// Minimizes ||u - c v||_F / sqrt(dim) over |c| = 1. The optimum is
/// c = tr(v^dag u) / |tr(v^dag u)|; when the trace vanishes every c gives the
/// same value and c = 1 is reported. No unitarity requirement, so it also
/// measures restrictions of propagators to a subspace.
PhaseAlignment align_phase(const ComplexMatrix& u, const ComplexMatrix& v);

/// Gate distance up to global phase. Both arguments must be unitary to 1e-8
/// and of equal dimension; throws std::invalid_argument otherwise.
double phase_distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// Realignment R(V)[(i,k),(j,l)] = V[(i,j),(k,l)] of a 4x4 two-qubit operator.
ComplexMatrix realign(const ComplexMatrix& v);

/// Number of singular values of realign(v) above tol * (largest). Equals 1
/// exactly when v is a tensor product S (x) T.
int realignment_rank(const ComplexMatrix& v, double tol);

/// Schmidt rank of a two-qubit pure state (amplitudes in |00>,|01>,|10>,|11>
/// order), singular values thresholded relative to the largest.
int schmidt_rank(const StateVector& psi, double tol);

/// Unit vector e_k of the given dimension.
StateVector basis_state(std::size_t dim, std::size_t k);

}  // namespace qdevsim

#endif  // QDEVSIM_LINALG_HPP
