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

// Independent oracles and hand-rolled random generators for the test suites.
// Nothing here calls into the library's numerical kernels.

#ifndef QDEVSIM_TESTS_ORACLES_HPP
#define QDEVSIM_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Seeded source of test inputs.
class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  double angle() { return uniform(-kPi, kPi); }

  /// Haar-like 2x2 unitary from a normalized quaternion and a global phase.
  Matrix unitary2() {
    double q[4];
    double norm = 0.0;
    for (double& x : q) {
      x = normal();
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : q) x /= norm;
    Matrix u(2, 2);
    u << Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]), Complex(q[0], -q[1]);
    return std::exp(kI * angle()) * u;
  }

  /// Unitary from Gram-Schmidt on a complex Gaussian matrix.
  Matrix unitary(int n) {
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = Complex(normal(), normal());
    for (int c = 0; c < n; ++c) {
      for (int k = 0; k < c; ++k) a.col(c) -= a.col(k).dot(a.col(c)) * a.col(k);
      a.col(c) /= a.col(c).norm();
    }
    return a;
  }

  Matrix hermitian(int n, double scale = 1.0) {
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = Complex(normal(), normal());
    return 0.5 * scale * (a + a.adjoint());
  }

 private:
  std::mt19937 rng_;
};

/// Kronecker product by explicit index arithmetic.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      for (Eigen::Index j = 0; j < b.rows(); ++j)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
  return out;
}

/// exp(scale * a) by Taylor series with scaling and squaring.
inline Matrix expm_taylor(const Matrix& a, Complex scale) {
  Matrix x = scale * a;
  int squarings = 0;
  double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    x /= 2.0;
    norm /= 2.0;
    ++squarings;
  }
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Fixed-step RK4 for i dpsi/dt = H(t) psi, returning the propagator.
inline Matrix rk4_propagator(const std::function<Matrix(double)>& h, int dim, double t, int steps) {
  Matrix u = Matrix::Identity(dim, dim);
  const double dt = t / steps;
  const auto f = [&](double s, const Matrix& y) -> Matrix { return -kI * h(s) * y; };
  for (int n = 0; n < steps; ++n) {
    const double s = n * dt;
    const Matrix k1 = f(s, u);
    const Matrix k2 = f(s + 0.5 * dt, u + 0.5 * dt * k1);
    const Matrix k3 = f(s + 0.5 * dt, u + 0.5 * dt * k2);
    const Matrix k4 = f(s + dt, u + dt * k3);
    u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}
inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// 4x4 swap written out entry by entry.
inline Matrix swap4() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

/// sigma . tau written out from its singlet/triplet structure: 2 U_sw - 1.
inline Matrix exchange_operator() { return 2.0 * swap4() - Matrix::Identity(4, 4); }

/// min_c ||u - c v||_F / sqrt(dim) by brute-force scan plus refinement, no trace formula.
inline double phase_free_distance(const Matrix& u, const Matrix& v) {
  double best = 1e300;
  double best_a = 0.0;
  const auto at = [&](double a) { return (u - std::exp(kI * a) * v).norm(); };
  for (int k = 0; k < 720; ++k) {
    const double a = 2.0 * kPi * k / 720.0;
    if (at(a) < best) {
      best = at(a);
      best_a = a;
    }
  }
  double lo = best_a - 2.0 * kPi / 720.0;
  double hi = best_a + 2.0 * kPi / 720.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (at(m1) < at(m2)) hi = m2; else lo = m1;
  }
  return at(0.5 * (lo + hi)) / std::sqrt(static_cast<double>(u.rows()));
}

}  // namespace oracle

#endif  // QDEVSIM_TESTS_ORACLES_HPP
