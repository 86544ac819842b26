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

#include "qubomap/pipeline.hpp"

#include <chrono>
#include <string>

#include "qubomap/error.hpp"
#include "qubomap/slicer.hpp"

namespace qubomap {

MappingReport map_circuit(const Circuit& circuit, const CoreTopology& topo,
                          const MapConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = circuit.num_qubits();
  if (topo.total_capacity() < n) {
    throw Error(ErrorKind::InfeasibleCapacity,
                "total core capacity " + std::to_string(topo.total_capacity()) +
                    " cannot hold " + std::to_string(n) + " qubits");
  }
  const SliceSet slices = slice(circuit, topo.max_capacity());
  const DistanceMatrix dist = hop_matrix(topo);
  const std::size_t T = slices.size();
  const double lambda = config.lambda.value_or(default_lambda(std::max<std::size_t>(T, 1), n));
  const VariableIndex index(n, topo.num_cores(), T, topo.capacities());

  MappingReport report;
  report.n = n;
  report.num_slices = T;
  report.num_cores = topo.num_cores();
  report.lambda = lambda;
  report.two_qubit_gates = circuit.multi_qubit_gate_count();
  const auto stats = slice_stats(slices);
  report.gates_per_slice = stats.gates_per_slice;
  report.dropped_duplicates = stats.dropped_duplicates;

  SolutionVector solution;
  if (config.solver == SolverKind::Exact) {
    auto exact = exact_solve(slices, topo, dist, lambda, config.exact);
    solution = std::move(exact.result.best);
    report.energy = exact.result.best_energy;
    report.solver = "exact";
  } else if (index.size() <= config.window_budget) {
    const QuboProblem problem = build(slices, topo, dist, lambda);
    auto solved = anneal(problem, config.anneal);
    solution = std::move(solved.best);
    report.energy = solved.best_energy;
    report.solver = "anneal";
  } else {
    auto windowed = solve_windowed(slices, topo, dist, lambda, config.window_budget, config.anneal);
    solution = std::move(windowed.result.best);
    report.energy = windowed.result.best_energy;
    report.solver = "windowed";
    report.windows = windowed.windows.size();
    for (const auto& w : windowed.windows) {
      if (!w.valid()) {
        report.problems.push_back("window at slice " + std::to_string(w.first_slice) +
                                  " left assignment penalty " + std::to_string(w.penalty) +
                                  (w.retried ? " after retry" : ""));
      }
    }
  }

  report.assignment_penalty = assignment_penalty(solution, slices, index);
  const DecodeResult decoded = decode(solution, index);
  report.assignment = decoded.best_effort;
  for (const auto& issue : decoded.issues) {
    report.problems.push_back("slice " + std::to_string(issue.slice) + ": qubit " +
                              std::to_string(issue.qubit) + " set on " +
                              std::to_string(issue.cores_set) + " cores");
  }
  if (decoded.ok()) {
    const Mapping& mapping = *decoded.mapping;
    const Verdict verdict = validate(mapping, slices, topo);
    for (const auto& v : verdict.violations) {
      report.problems.push_back(v.describe());
    }
    report.valid = verdict.valid();
    auto moved = transfers(mapping, dist);
    report.weighted_transfers = moved.weighted;
    report.transfer_count = moved.count;
    report.transfers = std::move(moved.events);
    report.loads = core_loads(mapping, topo.num_cores());
  } else {
    report.valid = false;
    report.loads = core_loads(Mapping(T, n, decoded.best_effort), topo.num_cores());
  }
  report.relative_transfers =
      report.two_qubit_gates == 0
          ? 0.0
          : static_cast<double>(report.weighted_transfers) /
                static_cast<double>(report.two_qubit_gates);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace qubomap
