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
#include <limits>
#include <numeric>
#include <string>

#include "qubomap/error.hpp"
#include "qubomap/solver.hpp"

namespace qubomap {

namespace {

// Connected components of the slice's interaction graph; every component
// has to sit on a single core.
std::vector<std::vector<Qubit>> components(const Slice& slice, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [a, b] : slice.graph.edges()) {
    parent[find(a)] = find(b);
  }
  std::vector<std::vector<Qubit>> groups;
  std::vector<std::size_t> group_of(n, n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto root = find(q);
    if (group_of[root] == n) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(static_cast<Qubit>(q));
  }
  return groups;
}

class PartitionEnumerator {
 public:
  PartitionEnumerator(const std::vector<std::vector<Qubit>>& groups, const CoreTopology& topo,
                      std::size_t n, bool canonical, std::size_t budget)
      : groups_(groups),
        topo_(topo),
        canonical_(canonical),
        budget_(budget),
        load_(topo.num_cores(), 0),
        current_(n, kNoCore) {}

  std::vector<std::vector<Core>> run() {
    recurse(0, 0);
    return std::move(out_);
  }

 private:
  void recurse(std::size_t g, std::size_t cores_used) {
    if (g == groups_.size()) {
      if (out_.size() >= budget_) {
        throw Error(ErrorKind::BudgetExceeded,
                    "exact solver: partition enumeration exceeds budget " +
                        std::to_string(budget_));
      }
      out_.push_back(current_);
      return;
    }
    const std::size_t size = groups_[g].size();
    const std::size_t limit =
        canonical_ ? std::min(cores_used + 1, topo_.num_cores()) : topo_.num_cores();
    for (Core j = 0; j < limit; ++j) {
      if (load_[j] + size > topo_.capacity(j)) {
        continue;
      }
      load_[j] += size;
      for (const Qubit q : groups_[g]) {
        current_[q] = j;
      }
      recurse(g + 1, std::max(cores_used, j + 1));
      load_[j] -= size;
    }
  }

  const std::vector<std::vector<Qubit>>& groups_;
  const CoreTopology& topo_;
  bool canonical_;
  std::size_t budget_;
  std::vector<std::size_t> load_;
  std::vector<Core> current_;
  std::vector<std::vector<Core>> out_;
};

}  // namespace

ExactSolution exact_solve(const SliceSet& slices, const CoreTopology& topo,
                          const DistanceMatrix& dist, double lambda,
                          const ExactOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = slices.num_qubits();
  const std::size_t T = slices.size();
  // build() validates capacity, lambda and the distance matrix.
  const QuboProblem problem = build(slices, topo, dist, lambda);

  // Relabelling all cores at once is a symmetry only when every core looks
  // alike: equal capacities and equal pairwise distances.
  const bool symmetric = topo.uniform_capacity() && dist.all_unit();

  std::vector<std::vector<std::vector<Core>>> states(T);
  std::size_t total_states = 0;
  for (std::size_t t = 0; t < T; ++t) {
    const auto groups = components(slices[t], n);
    states[t] = PartitionEnumerator(groups, topo, n, symmetric && t == 0, options.budget).run();
    if (states[t].empty()) {
      throw Error(ErrorKind::NoValidPartition,
                  "exact solver: slice " + std::to_string(t) + " has no valid partition");
    }
    total_states += states[t].size();
  }

  std::size_t transitions = 0;
  for (std::size_t t = 1; t < T; ++t) {
    transitions += states[t - 1].size() * states[t].size();
    if (transitions > options.budget) {
      throw Error(ErrorKind::BudgetExceeded, "exact solver: DP transitions exceed budget " +
                                                 std::to_string(options.budget));
    }
  }

  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> cost(T);
  std::vector<std::vector<std::uint32_t>> back(T);
  if (T > 0) {
    cost[0].assign(states[0].size(), 0);
  }
  for (std::size_t t = 1; t < T; ++t) {
    cost[t].assign(states[t].size(), kInf);
    back[t].assign(states[t].size(), 0);
    for (std::size_t p = 0; p < states[t].size(); ++p) {
      const auto& cur = states[t][p];
      for (std::size_t prev = 0; prev < states[t - 1].size(); ++prev) {
        const auto& before = states[t - 1][prev];
        std::size_t c = cost[t - 1][prev];
        for (std::size_t i = 0; i < n && c < cost[t][p]; ++i) {
          c += dist(before[i], cur[i]);
        }
        if (c < cost[t][p]) {
          cost[t][p] = c;
          back[t][p] = static_cast<std::uint32_t>(prev);
        }
      }
    }
  }

  std::vector<Core> table(T * n);
  std::size_t optimum = 0;
  if (T > 0) {
    auto p = static_cast<std::size_t>(
        std::distance(cost[T - 1].begin(), std::min_element(cost[T - 1].begin(), cost[T - 1].end())));
    optimum = cost[T - 1][p];
    for (std::size_t t = T; t-- > 0;) {
      std::copy(states[t][p].begin(), states[t][p].end(),
                table.begin() + static_cast<std::ptrdiff_t>(t * n));
      if (t > 0) {
        p = back[t][p];
      }
    }
  }

  Mapping mapping(T, n, std::move(table));
  SolveResult result;
  result.best = encode(mapping, problem.index());
  result.best_energy = problem.energy(result.best);
  result.read_energies = {result.best_energy};
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return ExactSolution{std::move(result), std::move(mapping), optimum, total_states};
}

}  // namespace qubomap
