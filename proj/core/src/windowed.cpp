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
#include <chrono>
#include <string>

#include "qubomap/error.hpp"
#include "qubomap/solver.hpp"

namespace qubomap {

bool WindowedResult::ok() const noexcept {
  return std::all_of(windows.begin(), windows.end(), [](const WindowReport& w) { return w.valid(); });
}

namespace {

// Core per qubit in slice t of x, or kNoCore where the one-hot row is broken.
std::vector<Core> slice_cores(const SolutionVector& x, const VariableIndex& index, std::size_t t) {
  std::vector<Core> cores(index.num_qubits(), kNoCore);
  for (std::size_t i = 0; i < index.num_qubits(); ++i) {
    std::size_t set = 0;
    for (std::size_t j = 0; j < index.num_cores(); ++j) {
      if (x[index.x(t, i, j)] != 0) {
        cores[i] = j;
        ++set;
      }
    }
    if (set != 1) {
      cores[i] = kNoCore;
    }
  }
  return cores;
}

double boundary_energy(const SolutionVector& x, const VariableIndex& index,
                       const std::vector<Core>& incoming, const DistanceMatrix& dist,
                       double lambda) {
  if (incoming.empty() || index.num_slices() == 0) {
    return 0.0;
  }
  double e = 0.0;
  for (std::size_t i = 0; i < index.num_qubits(); ++i) {
    if (incoming[i] == kNoCore) {
      continue;
    }
    for (std::size_t l = 0; l < index.num_cores(); ++l) {
      if (l != incoming[i] && x[index.x(0, i, l)] != 0) {
        e += lambda * static_cast<double>(dist(incoming[i], l));
      }
    }
  }
  return e;
}

}  // namespace

WindowedResult solve_windowed(const SliceSet& slices, const CoreTopology& topo,
                              const DistanceMatrix& dist, double lambda,
                              std::size_t window_budget, const AnnealParams& params) {
  const auto started = std::chrono::steady_clock::now();
  const VariableIndex full(slices.num_qubits(), topo.num_cores(), slices.size(),
                           topo.capacities());
  const std::size_t per_slice = full.vars_per_slice();
  if (window_budget < per_slice) {
    throw Error(ErrorKind::InvalidArgument,
                "window budget " + std::to_string(window_budget) +
                    " is smaller than one slice (" + std::to_string(per_slice) + " variables)");
  }
  const std::size_t slices_per_window = window_budget / per_slice;

  WindowedResult out;
  SolutionVector stitched(full.size());
  std::vector<Core> incoming;
  double total_energy = 0.0;

  for (std::size_t first = 0, w = 0; first < slices.size(); first += slices_per_window, ++w) {
    const std::size_t count = std::min(slices_per_window, slices.size() - first);
    const SliceSet window = slices.window(first, count);
    const QuboProblem problem = build(window, topo, dist, lambda, incoming);

    AnnealParams local = params;
    // A single window reproduces a plain anneal() call exactly.
    local.seed = w == 0 ? params.seed : derive_seed(params.seed, w);
    SolveResult solved = anneal(problem, local);
    double penalty = assignment_penalty(solved.best, window, problem.index());
    bool retried = false;
    if (penalty != 0.0) {
      local.reads = params.reads * 4;
      local.seed = derive_seed(local.seed, 0xA11CE);
      solved = anneal(problem, local);
      penalty = assignment_penalty(solved.best, window, problem.index());
      retried = true;
    }

    const auto& sub = problem.index();
    for (std::size_t t = 0; t < count; ++t) {
      for (std::size_t j = 0; j < sub.num_cores(); ++j) {
        for (std::size_t i = 0; i < sub.num_qubits(); ++i) {
          stitched[full.x(first + t, i, j)] = solved.best[sub.x(t, i, j)];
        }
        for (std::size_t s = 0; s < sub.capacities()[j]; ++s) {
          stitched[full.y(first + t, j, s)] = solved.best[sub.y(t, j, s)];
        }
      }
    }

    WindowReport report;
    report.first_slice = first;
    report.num_slices = count;
    report.energy = solved.best_energy;
    report.boundary_energy = boundary_energy(solved.best, sub, incoming, dist, lambda);
    report.penalty = penalty;
    report.retried = retried;
    out.windows.push_back(report);
    out.result.read_energies.push_back(solved.best_energy);
    total_energy += solved.best_energy;

    incoming = slice_cores(solved.best, sub, count - 1);
  }

  out.result.best = std::move(stitched);
  out.result.best_energy = total_energy;
  out.result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

}  // namespace qubomap
