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

// Truncated harmonic-oscillator (photon or phonon) space.

#ifndef QDEVSIM_FOCK_HPP
#define QDEVSIM_FOCK_HPP

#include "qdevsim/linalg.hpp"

namespace qdevsim {

/// Occupation numbers 0..n_max; dim = n_max + 1. The creation operator sends
/// |n_max> to zero, so [a, a^dag] = 1 holds everywhere except on |n_max>.
class FockSpace {
 public:
  /// Throws std::invalid_argument unless n_max >= 1.
  explicit FockSpace(int n_max);

  int n_max() const { return n_max_; }
  int dim() const { return n_max_ + 1; }

 private:
  int n_max_;
};

struct LadderOps {
  ComplexMatrix a;
  ComplexMatrix a_dag;
};

LadderOps ladder_ops(const FockSpace& space);

/// a^dag a = diag(0, 1, ..., n_max).
ComplexMatrix number_op(const FockSpace& space);

/// Unit vector |n>. Throws std::invalid_argument if n is outside [0, n_max].
StateVector fock_state(const FockSpace& space, int n);

}  // namespace qdevsim

#endif  // QDEVSIM_FOCK_HPP
