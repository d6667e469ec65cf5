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

#include "qdevsim/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace qdevsim {

namespace {

constexpr double kHermitianFastPathTol = 1e-10;
constexpr double kUnitaryInputTol = 1e-8;

void require_square(const ComplexMatrix& a, const char* what) {
  if (!is_square(a)) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                ")");
  }
}

}  // namespace

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols() && a.rows() > 0; }

bool is_finite(const ComplexMatrix& a) { return a.allFinite(); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  const ComplexMatrix residual = a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols());
  return residual.cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

ComplexMatrix expm_pade(const ComplexMatrix& a, Complex scale) {
  require_square(a, "expm");
  if (!is_finite(a)) throw std::invalid_argument("expm: non-finite entries");
  const ComplexMatrix scaled = scale * a;
  return scaled.exp();
}

ComplexMatrix expm(const ComplexMatrix& a, Complex scale) {
  require_square(a, "expm");
  if (!is_finite(a)) throw std::invalid_argument("expm: non-finite entries");
  if (!is_hermitian(a, kHermitianFastPathTol)) return expm_pade(a, scale);

  // Hermitian part only; the anti-Hermitian residue is below the fast-path tolerance.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success) return expm_pade(a, scale);
  const Eigen::VectorXcd phases =
      (scale * eig.eigenvalues().cast<Complex>()).array().exp().matrix();
  const ComplexMatrix& vecs = eig.eigenvectors();
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

PhaseAlignment align_phase(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("align_phase: dimension mismatch");
  }
  const Complex overlap = (v.adjoint() * u).trace();
  PhaseAlignment out;
  const double mag = std::abs(overlap);
  if (mag > 0.0) out.phase = overlap / mag;
  const double dim = static_cast<double>(u.rows());
  out.distance = (u - out.phase * v).norm() / std::sqrt(dim);
  return out;
}

double phase_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("phase_distance: dimension mismatch");
  }
  if (!is_unitary(u, kUnitaryInputTol) || !is_unitary(v, kUnitaryInputTol)) {
    throw std::invalid_argument("phase_distance: arguments must be unitary");
  }
  return align_phase(u, v).distance;
}

ComplexMatrix realign(const ComplexMatrix& v) {
  if (v.rows() != 4 || v.cols() != 4) {
    throw std::invalid_argument("realign: expected a 4x4 operator");
  }
  ComplexMatrix r(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          r(2 * i + k, 2 * j + l) = v(2 * i + j, 2 * k + l);
        }
      }
    }
  }
  return r;
}

namespace {

int relative_rank(const Eigen::VectorXd& singular_values, double tol) {
  if (singular_values.size() == 0) return 0;
  const double largest = singular_values.maxCoeff();
  if (largest == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    if (singular_values(i) > tol * largest) ++rank;
  }
  return rank;
}

}  // namespace

int realignment_rank(const ComplexMatrix& v, double tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(realign(v));
  return relative_rank(svd.singularValues(), tol);
}

int schmidt_rank(const StateVector& psi, double tol) {
  if (psi.size() != 4) throw std::invalid_argument("schmidt_rank: expected 4 amplitudes");
  ComplexMatrix m(2, 2);
  m << psi(0), psi(1), psi(2), psi(3);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return relative_rank(svd.singularValues(), tol);
}

StateVector basis_state(std::size_t dim, std::size_t k) {
  if (k >= dim) throw std::invalid_argument("basis_state: index out of range");
  StateVector e = StateVector::Zero(static_cast<Eigen::Index>(dim));
  e(static_cast<Eigen::Index>(k)) = 1.0;
  return e;
}

}  // namespace qdevsim
