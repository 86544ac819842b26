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
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qubomap {

using Qubit = std::uint32_t;

/// A gate is only the ordered list of logical qubits it touches.
class Gate {
 public:
  Gate() = default;
  Gate(std::initializer_list<Qubit> qubits) : qubits_(qubits) {}
  explicit Gate(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {}

  [[nodiscard]] const std::vector<Qubit>& qubits() const noexcept { return qubits_; }
  [[nodiscard]] std::size_t arity() const noexcept { return qubits_.size(); }
  [[nodiscard]] bool is_multi_qubit() const noexcept { return qubits_.size() >= 2; }

  /// Same set of qubits, ignoring the order inside the tuple.
  [[nodiscard]] bool same_qubits(const Gate& other) const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  std::vector<Qubit> qubits_;
};

/**
 * Program-ordered list of gates over n logical qubits.
 *
 * Construction validates every gate: indices must be < n and pairwise
 * distinct within a gate. Throws Error(InvalidCircuit) otherwise.
 */
class Circuit {
 public:
  Circuit(std::size_t n, std::vector<Gate> gates);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
  [[nodiscard]] std::size_t multi_qubit_gate_count() const;

 private:
  std::size_t n_;
  std::vector<Gate> gates_;
};

/// ASAP layer count over all gates, single-qubit ones included.
std::size_t depth(const Circuit& circuit);

/// Parses `{"n": <int>, "gates": [[<int>,...], ...]}`.
Circuit parse_circuit(std::string_view json_text);
std::string to_json_string(const Circuit& circuit);

using Edge = std::pair<Qubit, Qubit>;

/// Simple undirected graph over the logical qubits; edges stored as sorted
/// (low, high) pairs without multiplicity.
class InteractionGraph {
 public:
  InteractionGraph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t num_nodes() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t degree(Qubit q) const { return degree_.at(q); }
  [[nodiscard]] bool has_edge(Qubit a, Qubit b) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
};

/// Clique expansion of every multi-qubit gate; single-qubit gates add nothing.
InteractionGraph interaction_graph(std::size_t n, std::span<const Gate> gates);

/// Dense n x n integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  int& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  int operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> data_;
};

/// L = D - A.
IntMatrix laplacian(const InteractionGraph& graph);

}  // namespace qubomap
