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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qubomap/architecture.hpp"
#include "qubomap/mapping.hpp"
#include "qubomap/qubo.hpp"
#include "qubomap/slicer.hpp"

namespace qubomap {

struct BetaRange {
  double hot;   // starting inverse temperature
  double cold;  // final inverse temperature
};

/**
 * hot = ln 2 / dE_max, cold = ln 100 / dE_min, where dE_max is the largest
 * absolute row sum of Q (linear plus incident quadratic magnitudes) and
 * dE_min the smallest nonzero coefficient magnitude.
 */
BetaRange default_beta_range(const SparseQubo& q);

struct AnnealParams {
  std::size_t sweeps = 1000;
  std::size_t reads = 50;
  std::optional<BetaRange> beta;  // geometric schedule; derived from Q when unset
  std::uint64_t seed = 0;
  std::size_t jobs = 1;  // worker threads for independent reads; 0 = hardware
};

struct SolveResult {
  SolutionVector best;
  double best_energy = 0.0;
  std::vector<double> read_energies;
  double wall_time_s = 0.0;
};

/**
 * Simulated annealing with single-bit-flip Metropolis sweeps.
 *
 * Each read starts from a uniformly random state and sweeps the variables in
 * index order under a geometric beta schedule. Reads are seeded from
 * (seed, read index) alone, so the result does not depend on `jobs`. The best
 * read wins; ties go to the lowest read index. best_energy is re-evaluated
 * from the matrix.
 */
SolveResult anneal(const SparseQubo& q, const AnnealParams& params);
SolveResult anneal(const QuboProblem& q, const AnnealParams& params);

struct ExactOptions {
  // Cap on enumerated per-slice partitions and on DP transitions.
  std::size_t budget = 50'000'000;
};

struct ExactSolution {
  SolveResult result;
  Mapping mapping;
  std::size_t optimal_transfers = 0;  // hop-weighted
  std::size_t states = 0;             // valid partitions enumerated over all slices
};

/**
 * Global optimum of the objective over valid assignments.
 *
 * Enumerates, per slice, every placement of the interaction-graph components
 * onto cores within capacity, then runs a shortest-path DP across slices with
 * the hop-weighted transfer count as stage cost. With uniform capacities and
 * all-unit distances, the first slice is restricted to canonical core
 * labelings.
 *
 * Throws Error(BudgetExceeded) or Error(NoValidPartition).
 */
ExactSolution exact_solve(const SliceSet& slices, const CoreTopology& topo,
                          const DistanceMatrix& dist, double lambda,
                          const ExactOptions& options = {});

struct WindowReport {
  std::size_t first_slice = 0;
  std::size_t num_slices = 0;
  double energy = 0.0;           // window objective including boundary bias
  double boundary_energy = 0.0;  // the bias part: lambda * hops into first_slice
  double penalty = 0.0;          // assignment penalty of the window solution
  bool retried = false;
  [[nodiscard]] bool valid() const noexcept { return penalty == 0.0; }
};

struct WindowedResult {
  SolveResult result;
  std::vector<WindowReport> windows;
  [[nodiscard]] bool ok() const noexcept;
};

/**
 * Divide and conquer over consecutive slice windows that each fit
 * `window_budget` variables.
 *
 * Window w is annealed with the final-slice placement of window w - 1 fixed
 * and charged as linear bias on its first slice. A window left with a nonzero
 * assignment penalty is retried once with 4x reads; if it still fails the
 * failure shows up in `windows` and ok() is false.
 */
WindowedResult solve_windowed(const SliceSet& slices, const CoreTopology& topo,
                              const DistanceMatrix& dist, double lambda,
                              std::size_t window_budget, const AnnealParams& params);

/// Independent stream seed derived from a base seed and a stream id.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace qubomap
