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
#include <optional>
#include <string>
#include <vector>

#include "qubomap/architecture.hpp"
#include "qubomap/circuit.hpp"
#include "qubomap/mapping.hpp"
#include "qubomap/solver.hpp"

namespace qubomap {

enum class SolverKind { Anneal, Exact };

struct MapConfig {
  std::optional<double> lambda;  // default_lambda(T, n) when unset
  SolverKind solver = SolverKind::Anneal;
  AnnealParams anneal;
  std::size_t window_budget = 50'000;  // variables per annealed sub-problem
  ExactOptions exact;
};

struct MappingReport {
  bool valid = false;
  std::size_t n = 0;
  std::size_t num_slices = 0;
  std::size_t num_cores = 0;
  double lambda = 0.0;
  double energy = 0.0;
  double assignment_penalty = 0.0;  // of the raw solver vector, slack included
  std::size_t weighted_transfers = 0;  // M
  std::size_t transfer_count = 0;
  std::size_t two_qubit_gates = 0;     // multi-qubit gates of the input program
  double relative_transfers = 0.0;     // M per multi-qubit gate
  double wall_time_s = 0.0;
  std::string solver;                  // "anneal", "windowed" or "exact"
  std::size_t windows = 1;
  std::vector<Core> assignment;        // T x n, kNoCore where undecodable
  std::vector<TransferEvent> transfers;
  std::vector<std::vector<std::size_t>> loads;  // T x k
  std::vector<std::size_t> gates_per_slice;
  std::size_t dropped_duplicates = 0;
  std::vector<std::string> problems;   // decode issues and validation violations
};

/**
 * slice -> hop_matrix -> build -> solve -> decode -> validate -> transfers.
 *
 * Problems with the input (capacity below n, a gate wider than every core,
 * a disconnected topology) throw Error. A solver that fails to reach a valid
 * assignment still yields a report, with valid = false.
 */
MappingReport map_circuit(const Circuit& circuit, const CoreTopology& topo,
                          const MapConfig& config);

}  // namespace qubomap
