// Copyright 2026 The Gravphase Authors
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

#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "gravphase/gravphase.hpp"

namespace {

using namespace gravphase;

gravity::DephasingAngles random_angles(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> dist(-1e-3, 1e-3);
  gravity::DephasingAngles a{std::vector<double>(n), 1.0};
  for (auto &v : a.angles) {
    v = dist(rng);
  }
  return a;
}

void BM_Hadamard(benchmark::State &state) {
  const int n = int(state.range(0));
  auto s = sv::init_zero(n);
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) {
      sv::apply_gate(s, sv::Hadamard{q});
    }
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * n * (std::int64_t{1} << n));
}
BENCHMARK(BM_Hadamard)->DenseRange(10, 20, 5);

void BM_DiagonalPhase(benchmark::State &state) {
  const int n = int(state.range(0));
  auto s = sv::init_zero(n);
  const auto angles = random_angles(std::size_t(n - 1));
  for (auto _ : state) {
    sv::apply_diagonal_phase(s, angles);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_DiagonalPhase)->DenseRange(10, 20, 5);

void BM_StatevectorProtocol(benchmark::State &state) {
  const auto angles = random_angles(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(protocol::ancilla_probabilities(
        angles, protocol::Backend::kStatevector));
  }
}
BENCHMARK(BM_StatevectorProtocol)->Arg(8)->Arg(16)->Arg(20);

void BM_BranchProtocol(benchmark::State &state) {
  const auto angles = random_angles(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        protocol::ancilla_probabilities(angles, protocol::Backend::kBranch));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BranchProtocol)->Arg(1000)->Arg(100000);

void BM_Shots(benchmark::State &state) {
  const auto angles = random_angles(64);
  const protocol::RunOptions opts{std::uint64_t(state.range(0)), 1,
                                  protocol::Backend::kBranch, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(protocol::run_protocol(angles, opts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Shots)->Arg(1000000);

void BM_CumulativePhase(benchmark::State &state) {
  const auto chip = gravity::ChipGeometry::line(
      std::size_t(state.range(0)), 1e-3, angular_from_ghz(10.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(protocol::cumulative_phase_1d(chip, 1.0));
  }
}
BENCHMARK(BM_CumulativePhase)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
