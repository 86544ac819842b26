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

#include "qubomap/mapping.hpp"

#include <algorithm>

#include "qubomap/error.hpp"

namespace qubomap {

Mapping::Mapping(std::size_t num_slices, std::size_t num_qubits, std::vector<Core> cores)
    : T_(num_slices), n_(num_qubits), cores_(std::move(cores)) {
  if (cores_.size() != T_ * n_) {
    throw Error(ErrorKind::InvalidArgument, "mapping table must have T * n entries");
  }
}

std::vector<Core> Mapping::slice(std::size_t t) const {
  return {cores_.begin() + static_cast<std::ptrdiff_t>(t * n_),
          cores_.begin() + static_cast<std::ptrdiff_t>((t + 1) * n_)};
}

DecodeResult decode(const SolutionVector& x, const VariableIndex& index) {
  if (x.size() != index.size()) {
    throw Error(ErrorKind::InvalidArgument, "solution does not match the variable layout");
  }
  const std::size_t T = index.num_slices();
  const std::size_t n = index.num_qubits();
  DecodeResult result;
  result.best_effort.assign(T * n, kNoCore);
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t set = 0;
      for (std::size_t j = 0; j < index.num_cores(); ++j) {
        if (x[index.x(t, i, j)] != 0) {
          if (set == 0) {
            result.best_effort[t * n + i] = j;
          }
          ++set;
        }
      }
      if (set != 1) {
        result.issues.push_back({t, i, set});
      }
    }
  }
  if (result.issues.empty()) {
    result.mapping.emplace(T, n, result.best_effort);
  }
  return result;
}

SolutionVector encode(const Mapping& m, const VariableIndex& index) {
  if (m.num_slices() != index.num_slices() || m.num_qubits() != index.num_qubits()) {
    throw Error(ErrorKind::InvalidArgument, "mapping does not match the variable layout");
  }
  SolutionVector x(index.size());
  const auto loads = core_loads(m, index.num_cores());
  for (std::size_t t = 0; t < m.num_slices(); ++t) {
    for (std::size_t i = 0; i < m.num_qubits(); ++i) {
      const Core j = m.core(t, i);
      if (j >= index.num_cores()) {
        throw Error(ErrorKind::InvalidArgument, "mapping core out of range");
      }
      x[index.x(t, i, j)] = 1;
    }
    for (std::size_t j = 0; j < index.num_cores(); ++j) {
      const std::size_t fill = std::min(loads[t][j], index.capacities()[j]);
      for (std::size_t s = 0; s < fill; ++s) {
        x[index.y(t, j, s)] = 1;
      }
    }
  }
  return x;
}

std::string Violation::describe() const {
  const std::string where = "slice " + std::to_string(slice) + ": ";
  switch (kind) {
    case ViolationKind::SplitEdge:
      return where + "edge (" + std::to_string(a) + "," + std::to_string(b) +
             ") split across cores";
    case ViolationKind::OverCapacity:
      return where + "core " + std::to_string(a) + " holds " + std::to_string(b) +
             " qubits, over capacity";
    case ViolationKind::CoreOutOfRange:
      return where + "qubit " + std::to_string(a) + " placed on nonexistent core " +
             std::to_string(b);
  }
  return where + "unknown violation";
}

std::vector<std::vector<std::size_t>> core_loads(const Mapping& m, std::size_t num_cores) {
  std::vector<std::vector<std::size_t>> loads(m.num_slices(),
                                              std::vector<std::size_t>(num_cores, 0));
  for (std::size_t t = 0; t < m.num_slices(); ++t) {
    for (std::size_t i = 0; i < m.num_qubits(); ++i) {
      const Core j = m.core(t, i);
      if (j < num_cores) {
        ++loads[t][j];
      }
    }
  }
  return loads;
}

Verdict validate(const Mapping& m, const SliceSet& slices, const CoreTopology& topo) {
  if (m.num_slices() != slices.size() || m.num_qubits() != slices.num_qubits()) {
    throw Error(ErrorKind::InvalidArgument, "mapping does not match the slices");
  }
  Verdict verdict;
  const std::size_t k = topo.num_cores();
  for (std::size_t t = 0; t < m.num_slices(); ++t) {
    bool in_range = true;
    for (std::size_t i = 0; i < m.num_qubits(); ++i) {
      if (m.core(t, i) >= k) {
        verdict.violations.push_back({ViolationKind::CoreOutOfRange, t, i, m.core(t, i)});
        in_range = false;
      }
    }
    if (!in_range) {
      continue;
    }
    for (const auto& [a, b] : slices[t].graph.edges()) {
      if (m.core(t, a) != m.core(t, b)) {
        verdict.violations.push_back({ViolationKind::SplitEdge, t, a, b});
      }
    }
  }
  const auto loads = core_loads(m, k);
  for (std::size_t t = 0; t < m.num_slices(); ++t) {
    for (std::size_t j = 0; j < k; ++j) {
      if (loads[t][j] > topo.capacity(j)) {
        verdict.violations.push_back({ViolationKind::OverCapacity, t, j, loads[t][j]});
      }
    }
  }
  return verdict;
}

TransferSummary transfers(const Mapping& m, const DistanceMatrix& dist) {
  TransferSummary summary;
  for (std::size_t t = 1; t < m.num_slices(); ++t) {
    for (std::size_t i = 0; i < m.num_qubits(); ++i) {
      const Core from = m.core(t - 1, i);
      const Core to = m.core(t, i);
      if (from == to) {
        continue;
      }
      const std::size_t hops = dist(from, to);
      summary.events.push_back({i, t - 1, from, to, hops});
      summary.weighted += hops;
    }
  }
  summary.count = summary.events.size();
  return summary;
}

}  // namespace qubomap
