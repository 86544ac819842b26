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

#include "qubomap/slicer.hpp"

#include <algorithm>
#include <string>

#include "qubomap/error.hpp"

namespace qubomap {

SliceSet::SliceSet(std::size_t n, std::vector<Slice> slices, std::size_t dropped_duplicates)
    : n_(n), slices_(std::move(slices)), dropped_(dropped_duplicates) {}

SliceSet SliceSet::window(std::size_t first, std::size_t count) const {
  if (first > slices_.size() || count > slices_.size() - first) {
    throw Error(ErrorKind::InvalidArgument, "slice window out of range");
  }
  std::vector<Slice> sub(slices_.begin() + static_cast<std::ptrdiff_t>(first),
                         slices_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return SliceSet(n_, std::move(sub), 0);
}

namespace {

constexpr std::size_t kNoGate = static_cast<std::size_t>(-1);

// Working slice: gates plus, per qubit, the index of the gate using it.
struct Layer {
  std::vector<Gate> gates;
  std::vector<std::size_t> owner;

  explicit Layer(std::size_t n) : owner(n, kNoGate) {}

  [[nodiscard]] bool holds_identical(const Gate& gate) const {
    const auto g = owner[gate.qubits().front()];
    return g != kNoGate && gates[g].same_qubits(gate);
  }

  [[nodiscard]] bool conflicts(const Gate& gate) const {
    return std::any_of(gate.qubits().begin(), gate.qubits().end(),
                       [&](Qubit q) { return owner[q] != kNoGate; });
  }

  void add(const Gate& gate) {
    for (const Qubit q : gate.qubits()) {
      owner[q] = gates.size();
    }
    gates.push_back(gate);
  }
};

}  // namespace

SliceSet slice(const Circuit& circuit, std::optional<std::size_t> max_capacity) {
  const std::size_t n = circuit.num_qubits();
  std::vector<Layer> layers;
  std::size_t dropped = 0;

  for (const auto& gate : circuit.gates()) {
    if (!gate.is_multi_qubit()) {
      continue;
    }
    if (max_capacity && gate.arity() > *max_capacity) {
      throw Error(ErrorKind::UnmappableGate,
                  "gate on " + std::to_string(gate.arity()) +
                      " qubits exceeds the largest core capacity " + std::to_string(*max_capacity));
    }
    // Start at the first empty slice (index == number of non-empty slices)
    // and descend. The empty slice can never match or conflict.
    std::size_t t = layers.size();
    std::size_t target = kNoGate;
    while (true) {
      if (t < layers.size()) {
        if (layers[t].holds_identical(gate)) {
          ++dropped;
          break;
        }
        if (layers[t].conflicts(gate)) {
          target = t + 1;
          break;
        }
      }
      if (t == 0) {
        target = 0;
        break;
      }
      --t;
    }
    if (target == kNoGate) {
      continue;
    }
    if (target == layers.size()) {
      layers.emplace_back(n);
    }
    layers[target].add(gate);
  }

  std::vector<Slice> slices;
  slices.reserve(layers.size());
  for (auto& layer : layers) {
    auto graph = interaction_graph(n, layer.gates);
    auto lap = laplacian(graph);
    slices.push_back(Slice{std::move(layer.gates), std::move(graph), std::move(lap)});
  }
  return SliceSet(n, std::move(slices), dropped);
}

SliceStats slice_stats(const SliceSet& slices) {
  SliceStats stats;
  stats.num_slices = slices.size();
  stats.dropped_duplicates = slices.dropped_duplicates();
  for (const auto& s : slices.slices()) {
    stats.gates_per_slice.push_back(s.gates.size());
    stats.max_parallelism = std::max(stats.max_parallelism, s.gates.size());
    stats.total_gates += s.gates.size();
  }
  return stats;
}

}  // namespace qubomap
