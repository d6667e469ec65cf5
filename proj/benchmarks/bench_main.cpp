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

#include <benchmark/benchmark.h>

#include <random>

#include "qdevsim/iontrap.hpp"
#include "qdevsim/qdot.hpp"

namespace {

using qdevsim::ComplexMatrix;

ComplexMatrix random_hermitian(int n) {
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> normal;
  ComplexMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = {normal(rng), normal(rng)};
  }
  return 0.5 * (a + a.adjoint());
}

void BM_ExpmHermitian(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qdevsim::expm(h, {0.0, -1.0}));
}
BENCHMARK(BM_ExpmHermitian)->Arg(4)->Arg(16)->Arg(36)->Arg(64);

void BM_ExpmPade(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qdevsim::expm_pade(h, {0.0, -1.0}));
}
BENCHMARK(BM_ExpmPade)->Arg(4)->Arg(16)->Arg(36)->Arg(64);

void BM_CiracZoller(benchmark::State& state) {
  qdevsim::IonTrapParams p;
  p.phonon_max = static_cast<int>(state.range(0));
  const auto route = state.range(1) == 0 ? qdevsim::PropagatorRoute::ClosedForm : qdevsim::PropagatorRoute::Exponential;
  for (auto _ : state) benchmark::DoNotOptimize(qdevsim::cirac_zoller_gate(p, route).full);
}
BENCHMARK(BM_CiracZoller)->Args({3, 0})->Args({3, 1})->Args({8, 0})->Args({8, 1});

void BM_DysonPropagator(benchmark::State& state) {
  qdevsim::PulseSchedule s = qdevsim::qpi_schedule();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qdevsim::dyson_propagator(s, order));
}
BENCHMARK(BM_DysonPropagator)->DenseRange(0, 8, 4);

}  // namespace

BENCHMARK_MAIN();
