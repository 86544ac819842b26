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
#include <vector>

#include "qubomap/circuit.hpp"

namespace qubomap {

/// One circuit slice: concurrently executable gates, their interaction graph
/// and its Laplacian (materialised once).
struct Slice {
  std::vector<Gate> gates;
  InteractionGraph graph;
  IntMatrix laplacian;
};

class SliceSet {
 public:
  SliceSet(std::size_t n, std::vector<Slice> slices, std::size_t dropped_duplicates = 0);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return slices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return slices_.empty(); }
  [[nodiscard]] const std::vector<Slice>& slices() const noexcept { return slices_; }
  [[nodiscard]] const Slice& operator[](std::size_t t) const { return slices_.at(t); }

  /// Gates dropped because an identical gate already sat in the target slice.
  [[nodiscard]] std::size_t dropped_duplicates() const noexcept { return dropped_; }

  /// Consecutive sub-range [first, first + count) as its own SliceSet.
  [[nodiscard]] SliceSet window(std::size_t first, std::size_t count) const;

 private:
  std::size_t n_;
  std::vector<Slice> slices_;
  std::size_t dropped_;
};

/**
 * Layers the multi-qubit gates of `circuit` in program order.
 *
 * Each gate starts at the first empty slice and descends towards slice 0
 * while the slice it looks at neither holds an identical gate nor touches one
 * of its qubits. An identical gate drops it; a conflicting slice s places it
 * in s + 1; reaching slice 0 without conflict places it there. Single-qubit
 * gates are skipped.
 *
 * When `max_capacity` is given, a gate touching more qubits than any core can
 * hold is rejected with Error(UnmappableGate).
 */
SliceSet slice(const Circuit& circuit, std::optional<std::size_t> max_capacity = std::nullopt);

struct SliceStats {
  std::size_t num_slices = 0;
  std::vector<std::size_t> gates_per_slice;
  std::size_t max_parallelism = 0;
  std::size_t total_gates = 0;
  std::size_t dropped_duplicates = 0;
};

SliceStats slice_stats(const SliceSet& slices);

}  // namespace qubomap
