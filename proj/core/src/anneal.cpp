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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "qubomap/error.hpp"
#include "qubomap/solver.hpp"

namespace qubomap {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finaliser over base ^ golden-ratio-scrambled stream id.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BetaRange default_beta_range(const SparseQubo& q) {
  const std::size_t n = q.num_variables();
  std::vector<double> row(n, 0.0);
  double min_coeff = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::abs(q.linear()[i]);
    row[i] += c;
    if (c > 0.0) {
      min_coeff = std::min(min_coeff, c);
    }
  }
  for (const auto& t : q.quadratic()) {
    const double c = std::abs(t.coeff);
    row[t.i] += c;
    row[t.j] += c;
    min_coeff = std::min(min_coeff, c);
  }
  const double max_row = row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
  if (max_row == 0.0 || !std::isfinite(min_coeff)) {
    return {0.1, 1.0};
  }
  BetaRange range{std::log(2.0) / max_row, std::log(100.0) / min_coeff};
  if (range.cold <= range.hot) {
    range.cold = range.hot * 10.0;
  }
  return range;
}

namespace {

// Compressed adjacency of the quadratic part, both directions.
struct Adjacency {
  std::vector<std::size_t> start;
  std::vector<std::uint32_t> neighbour;
  std::vector<double> weight;

  explicit Adjacency(const SparseQubo& q) : start(q.num_variables() + 1, 0) {
    for (const auto& t : q.quadratic()) {
      ++start[t.i + 1];
      ++start[t.j + 1];
    }
    for (std::size_t i = 0; i < q.num_variables(); ++i) {
      start[i + 1] += start[i];
    }
    neighbour.resize(start.back());
    weight.resize(start.back());
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (const auto& t : q.quadratic()) {
      neighbour[fill[t.i]] = t.j;
      weight[fill[t.i]++] = t.coeff;
      neighbour[fill[t.j]] = t.i;
      weight[fill[t.j]++] = t.coeff;
    }
  }
};

SolutionVector run_read(const SparseQubo& q, const Adjacency& adj, const std::vector<double>& betas,
                        std::uint64_t seed) {
  const std::size_t n = q.num_variables();
  std::mt19937_64 rng(seed);
  constexpr double kUnit = 0x1.0p-53;
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * kUnit; };

  SolutionVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<std::uint8_t>(rng() >> 63);
  }
  // field[i] = energy change contribution of x_i: a_i + sum_j b_ij x_j.
  std::vector<double> field(q.linear());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) {
      continue;
    }
    for (std::size_t e = adj.start[i]; e < adj.start[i + 1]; ++e) {
      field[adj.neighbour[e]] += adj.weight[e];
    }
  }

  for (const double beta : betas) {
    const double cutoff = 40.0 / beta;  // exp(-40) never accepted in practice
    for (std::size_t i = 0; i < n; ++i) {
      const double delta = x[i] != 0 ? -field[i] : field[i];
      if (delta > 0.0 && (delta > cutoff || uniform() >= std::exp(-beta * delta))) {
        continue;
      }
      x[i] ^= 1U;
      const double sign = x[i] != 0 ? 1.0 : -1.0;
      for (std::size_t e = adj.start[i]; e < adj.start[i + 1]; ++e) {
        field[adj.neighbour[e]] += sign * adj.weight[e];
      }
    }
  }
  return x;
}

std::vector<double> geometric_schedule(const BetaRange& range, std::size_t sweeps) {
  std::vector<double> betas(sweeps);
  if (sweeps == 1) {
    betas[0] = range.cold;
    return betas;
  }
  const double ratio = std::log(range.cold / range.hot) / static_cast<double>(sweeps - 1);
  for (std::size_t s = 0; s < sweeps; ++s) {
    betas[s] = range.hot * std::exp(ratio * static_cast<double>(s));
  }
  return betas;
}

}  // namespace

SolveResult anneal(const SparseQubo& q, const AnnealParams& params) {
  if (params.sweeps == 0 || params.reads == 0) {
    throw Error(ErrorKind::InvalidArgument, "sweeps and reads must be positive");
  }
  const auto range = params.beta.value_or(default_beta_range(q));
  if (!(range.hot > 0.0) || !(range.cold > range.hot)) {
    throw Error(ErrorKind::InvalidArgument, "beta schedule needs 0 < beta_min < beta_max");
  }
  const auto started = std::chrono::steady_clock::now();
  const Adjacency adj(q);
  const auto betas = geometric_schedule(range, params.sweeps);

  std::vector<SolutionVector> states(params.reads);
  std::vector<double> energies(params.reads, 0.0);
  std::size_t jobs = params.jobs == 0 ? std::thread::hardware_concurrency() : params.jobs;
  jobs = std::clamp<std::size_t>(jobs, 1, params.reads);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < params.reads; r = next++) {
      states[r] = run_read(q, adj, betas, derive_seed(params.seed, r));
      energies[r] = q.energy(states[r]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      pool.emplace_back(worker);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::distance(energies.begin(), std::min_element(energies.begin(), energies.end())));
  SolveResult result;
  result.best = std::move(states[best]);
  result.best_energy = q.energy(result.best);
  result.read_energies = std::move(energies);
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

SolveResult anneal(const QuboProblem& q, const AnnealParams& params) {
  return anneal(q.matrix(), params);
}

}  // namespace qubomap
