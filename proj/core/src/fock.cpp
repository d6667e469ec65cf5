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

#include "qdevsim/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdevsim {

FockSpace::FockSpace(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw std::invalid_argument("FockSpace: n_max must be >= 1, got " + std::to_string(n_max));
}

LadderOps ladder_ops(const FockSpace& space) {
  const int d = space.dim();
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ComplexMatrix a_dag = a.adjoint();
  return {std::move(a), std::move(a_dag)};
}

ComplexMatrix number_op(const FockSpace& space) {
  ComplexMatrix n = ComplexMatrix::Zero(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) n(k, k) = static_cast<double>(k);
  return n;
}

StateVector fock_state(const FockSpace& space, int n) {
  if (n < 0 || n > space.n_max()) {
    throw std::invalid_argument("fock_state: n = " + std::to_string(n) + " outside [0, " +
                                std::to_string(space.n_max()) + "]");
  }
  return basis_state(static_cast<std::size_t>(space.dim()), static_cast<std::size_t>(n));
}

}  // namespace qdevsim
