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

#include "qubomap/circuit.hpp"

#include <algorithm>
#include <string>

#include <nlohmann/json.hpp>

#include "qubomap/error.hpp"

namespace qubomap {

bool Gate::same_qubits(const Gate& other) const {
  if (qubits_.size() != other.qubits_.size()) {
    return false;
  }
  auto a = qubits_;
  auto b = other.qubits_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Circuit::Circuit(std::size_t n, std::vector<Gate> gates) : n_(n), gates_(std::move(gates)) {
  if (n_ < 1) {
    throw Error(ErrorKind::InvalidCircuit, "circuit must have at least one qubit");
  }
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const auto& qs = gates_[g].qubits();
    if (qs.empty()) {
      throw Error(ErrorKind::InvalidCircuit, "gate " + std::to_string(g) + " has no qubits");
    }
    for (std::size_t a = 0; a < qs.size(); ++a) {
      if (qs[a] >= n_) {
        throw Error(ErrorKind::InvalidCircuit,
                    "gate " + std::to_string(g) + ": qubit index " + std::to_string(qs[a]) +
                        " out of range for n=" + std::to_string(n_));
      }
      for (std::size_t b = a + 1; b < qs.size(); ++b) {
        if (qs[a] == qs[b]) {
          throw Error(ErrorKind::InvalidCircuit, "gate " + std::to_string(g) +
                                                     ": duplicate qubit index " +
                                                     std::to_string(qs[a]));
        }
      }
    }
  }
}

std::size_t Circuit::multi_qubit_gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_multi_qubit(); }));
}

std::size_t depth(const Circuit& circuit) {
  std::vector<std::size_t> level(circuit.num_qubits(), 0);
  std::size_t deepest = 0;
  for (const auto& gate : circuit.gates()) {
    std::size_t start = 0;
    for (const Qubit q : gate.qubits()) {
      start = std::max(start, level[q]);
    }
    for (const Qubit q : gate.qubits()) {
      level[q] = start + 1;
    }
    deepest = std::max(deepest, start + 1);
  }
  return deepest;
}

Circuit parse_circuit(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("circuit JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("gates")) {
    throw Error(ErrorKind::MalformedInput, "circuit JSON needs keys \"n\" and \"gates\"");
  }
  const auto& n_field = doc.at("n");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    throw Error(ErrorKind::MalformedInput, "circuit JSON: \"n\" must be a positive integer");
  }
  const auto& gates_field = doc.at("gates");
  if (!gates_field.is_array()) {
    throw Error(ErrorKind::MalformedInput, "circuit JSON: \"gates\" must be an array");
  }
  std::vector<Gate> gates;
  gates.reserve(gates_field.size());
  for (const auto& g : gates_field) {
    if (!g.is_array()) {
      throw Error(ErrorKind::MalformedInput, "circuit JSON: each gate must be an array");
    }
    std::vector<Qubit> qs;
    qs.reserve(g.size());
    for (const auto& q : g) {
      if (!q.is_number_integer() || q.get<long long>() < 0) {
        throw Error(ErrorKind::MalformedInput,
                    "circuit JSON: qubit indices must be non-negative integers");
      }
      qs.push_back(static_cast<Qubit>(q.get<long long>()));
    }
    gates.emplace_back(std::move(qs));
  }
  return Circuit(static_cast<std::size_t>(n_field.get<long long>()), std::move(gates));
}

std::string to_json_string(const Circuit& circuit) {
  // One gate per line keeps large generated circuits diffable.
  std::string out = "{\"n\": " + std::to_string(circuit.num_qubits()) + ", \"gates\": [";
  const auto& gates = circuit.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    out += g == 0 ? "\n  [" : ",\n  [";
    const auto& qs = gates[g].qubits();
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += std::to_string(qs[i]);
    }
    out += "]";
  }
  out += gates.empty() ? "]}\n" : "\n]}\n";
  return out;
}

InteractionGraph::InteractionGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), degree_(n, 0) {
  for (auto& [a, b] : edges) {
    if (a == b || a >= n || b >= n) {
      throw Error(ErrorKind::InvalidArgument, "interaction graph edge out of range or self-loop");
    }
    if (a > b) {
      std::swap(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [a, b] : edges_) {
    ++degree_[a];
    ++degree_[b];
  }
}

bool InteractionGraph::has_edge(Qubit a, Qubit b) const {
  if (a > b) {
    std::swap(a, b);
  }
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

InteractionGraph interaction_graph(std::size_t n, std::span<const Gate> gates) {
  std::vector<Edge> edges;
  for (const auto& gate : gates) {
    const auto& qs = gate.qubits();
    for (std::size_t a = 0; a < qs.size(); ++a) {
      for (std::size_t b = a + 1; b < qs.size(); ++b) {
        edges.emplace_back(qs[a], qs[b]);
      }
    }
  }
  return InteractionGraph(n, std::move(edges));
}

IntMatrix laplacian(const InteractionGraph& graph) {
  IntMatrix lap(graph.num_nodes());
  for (const auto& [a, b] : graph.edges()) {
    lap(a, a) += 1;
    lap(b, b) += 1;
    lap(a, b) -= 1;
    lap(b, a) -= 1;
  }
  return lap;
}

}  // namespace qubomap
