// Copyright 2026 The qubomap Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "qubomap/architecture.hpp"
#include "qubomap/benchgen.hpp"
#include "qubomap/qubo.hpp"
#include "qubomap/slicer.hpp"

namespace {

// QFT slices on a 2x2 grid sized to hold every qubit.
struct Fixture {
  qubomap::CoreTopology topo;
  qubomap::SliceSet slices;
  qubomap::DistanceMatrix dist;

  explicit Fixture(std::size_t n)
      : topo(qubomap::grid(2, 2, (n + 3) / 4)),
        slices(qubomap::slice(qubomap::bench::qft(n), topo.max_capacity())),
        dist(qubomap::hop_matrix(topo)) {}
};

void BM_Build(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  const double lambda = qubomap::default_lambda(f.slices.size(), f.slices.num_qubits());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qubomap::build(f.slices, f.topo, f.dist, lambda));
  }
}
BENCHMARK(BM_Build)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Energy(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  const auto q = qubomap::build(f.slices, f.topo, f.dist, 0.01);
  std::mt19937_64 rng(3);
  qubomap::SolutionVector x(q.num_variables());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::uint8_t>(rng() & 1u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.energy(x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(q.num_variables()));
}
BENCHMARK(BM_Energy)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
