// Copyright 2026 The gatelab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "gatelab/dilation.hpp"
#include "gatelab/fock.hpp"
#include "gatelab/permanent.hpp"
#include "gatelab/phase_gate.hpp"
#include "gatelab/toffoli.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

gatelab::ComplexMatrix random_matrix(int n, unsigned seed) {
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return double(gen() >> 11) / 9007199254740992.0 * 2.0 - 1.0; };
  gatelab::ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = gatelab::Complex(unit(), unit());
    }
  }
  return m;
}

void BM_Permanent(benchmark::State& state) {
  const gatelab::ComplexMatrix m = random_matrix(int(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gatelab::permanent(m));
  }
}
BENCHMARK(BM_Permanent)->DenseRange(4, 12, 2);

void BM_PhaseNetworkInduced(benchmark::State& state) {
  const gatelab::NetworkDescription net = gatelab::build_network(kPi / 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gatelab::verify_network(net, kPi / 2.0, 1e-9));
  }
}
BENCHMARK(BM_PhaseNetworkInduced);

void BM_ToffoliObjective(benchmark::State& state) {
  for (auto _ : state) {
    const auto sv = gatelab::singular_values(gatelab::toffoli_bracket(2.1, 1.3, -0.8));
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_ToffoliObjective);

void BM_ToffoliOptimize(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gatelab::optimize_toffoli(kPi));
  }
}
BENCHMARK(BM_ToffoliOptimize);

}  // namespace

BENCHMARK_MAIN();
