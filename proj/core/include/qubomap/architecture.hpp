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
#include <string_view>
#include <utility>
#include <vector>

namespace qubomap {

using Core = std::size_t;
using Link = std::pair<Core, Core>;

/**
 * Multi-core layout: k cores with per-core qubit capacities and undirected
 * inter-core links. Intra-core connectivity is all-to-all and not modelled.
 *
 * The constructor rejects k = 0, zero capacities, self-links and link
 * endpoints >= k (Error(InvalidTopology)). Connectivity is checked by
 * hop_matrix(), which is the only consumer that needs it.
 */
class CoreTopology {
 public:
  CoreTopology(std::vector<std::size_t> capacities, std::vector<Link> links);

  [[nodiscard]] std::size_t num_cores() const noexcept { return capacities_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& capacities() const noexcept { return capacities_; }
  [[nodiscard]] std::size_t capacity(Core j) const { return capacities_.at(j); }
  [[nodiscard]] const std::vector<Link>& links() const noexcept { return links_; }
  [[nodiscard]] std::size_t total_capacity() const noexcept;
  [[nodiscard]] std::size_t max_capacity() const noexcept;
  [[nodiscard]] bool uniform_capacity() const noexcept;

 private:
  std::vector<std::size_t> capacities_;
  std::vector<Link> links_;
};

CoreTopology all_to_all(std::size_t cores, std::size_t capacity);

/// 4-neighbour grid; core index = row * cols + col.
CoreTopology grid(std::size_t rows, std::size_t cols, std::size_t capacity);

/// `{"cores": k, "capacities": [...], "links": [[a, b], ...]}`
CoreTopology parse_topology(std::string_view json_text);
std::string to_json_string(const CoreTopology& topo);

/// CLI form: `all2all:k,c`, `grid:r,c,cap` or `file:<path>`.
CoreTopology parse_topology_spec(std::string_view spec);

/// Symmetric hop-count matrix between cores.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t k, std::vector<std::size_t> hops);

  [[nodiscard]] std::size_t num_cores() const noexcept { return k_; }
  [[nodiscard]] std::size_t operator()(Core j, Core l) const { return hops_[j * k_ + l]; }

  /// True when every off-diagonal entry is 1 (all-to-all connected cores).
  [[nodiscard]] bool all_unit() const noexcept;
  [[nodiscard]] std::size_t diameter() const noexcept;

 private:
  std::size_t k_;
  std::vector<std::size_t> hops_;
};

/// BFS from every core. Throws Error(DisconnectedTopology) naming the first
/// unreachable pair.
DistanceMatrix hop_matrix(const CoreTopology& topo);

}  // namespace qubomap
