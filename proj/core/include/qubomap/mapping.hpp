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
#include <string>
#include <vector>

#include "qubomap/architecture.hpp"
#include "qubomap/qubo.hpp"
#include "qubomap/slicer.hpp"

namespace qubomap {

/// Per-slice placement of every logical qubit on one core (T x n table).
class Mapping {
 public:
  Mapping(std::size_t num_slices, std::size_t num_qubits, std::vector<Core> cores);

  [[nodiscard]] std::size_t num_slices() const noexcept { return T_; }
  [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
  [[nodiscard]] Core core(std::size_t t, std::size_t qubit) const { return cores_[t * n_ + qubit]; }
  [[nodiscard]] std::vector<Core> slice(std::size_t t) const;
  [[nodiscard]] const std::vector<Core>& table() const noexcept { return cores_; }

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  std::size_t T_;
  std::size_t n_;
  std::vector<Core> cores_;
};

struct DecodeIssue {
  std::size_t slice;
  std::size_t qubit;
  std::size_t cores_set;  // 0 = unassigned, >= 2 = multiply assigned
};

/// Either a Mapping or the list of (slice, qubit) cells without exactly one
/// core bit. `best_effort` always holds the first set core (kNoCore if none)
/// so that invalid solutions can still be reported.
struct DecodeResult {
  std::optional<Mapping> mapping;
  std::vector<DecodeIssue> issues;
  std::vector<Core> best_effort;

  [[nodiscard]] bool ok() const noexcept { return mapping.has_value(); }
};

/// Reads only the assignment bits; slack bits are ignored.
DecodeResult decode(const SolutionVector& x, const VariableIndex& index);

/// Assignment bits from `m`, slack bits set for the first load(t, j) slots.
SolutionVector encode(const Mapping& m, const VariableIndex& index);

enum class ViolationKind { SplitEdge, OverCapacity, CoreOutOfRange };

struct Violation {
  ViolationKind kind;
  std::size_t slice;
  std::size_t a;  // edge endpoint / core / qubit
  std::size_t b;  // edge endpoint / load / core

  [[nodiscard]] std::string describe() const;
};

struct Verdict {
  std::vector<Violation> violations;
  [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
};

/// Co-location of every interaction edge and per-core load <= capacity.
Verdict validate(const Mapping& m, const SliceSet& slices, const CoreTopology& topo);

/// Occupancy table: loads[t][j] = qubits on core j in slice t.
std::vector<std::vector<std::size_t>> core_loads(const Mapping& m, std::size_t num_cores);

struct TransferEvent {
  std::size_t qubit;
  std::size_t from_slice;  // the move happens between from_slice and from_slice + 1
  Core from_core;
  Core to_core;
  std::size_t hops;
};

struct TransferSummary {
  std::vector<TransferEvent> events;
  std::size_t weighted = 0;  // M: sum of hops
  std::size_t count = 0;     // number of events
};

TransferSummary transfers(const Mapping& m, const DistanceMatrix& dist);

}  // namespace qubomap
