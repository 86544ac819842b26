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

#include "qubomap/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "qubomap/error.hpp"

namespace qubomap {

VariableIndex::VariableIndex(std::size_t n, std::size_t k, std::size_t T,
                             std::vector<std::size_t> capacities)
    : n_(n), k_(k), T_(T), caps_(std::move(capacities)) {
  if (caps_.size() != k_) {
    throw Error(ErrorKind::InvalidArgument, "one capacity per core required");
  }
  slack_offset_.resize(k_);
  std::exclusive_scan(caps_.begin(), caps_.end(), slack_offset_.begin(), std::size_t{0});
  slack_per_slice_ = std::accumulate(caps_.begin(), caps_.end(), std::size_t{0});
}

VariableIndex::Decoded VariableIndex::decode(std::size_t flat) const {
  if (flat >= size()) {
    throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  }
  if (flat < assignment_count()) {
    const std::size_t qubit = flat % n_;
    const std::size_t block = flat / n_;
    return {VariableKind::Assignment, block / k_, block % k_, qubit};
  }
  const std::size_t rel = flat - assignment_count();
  const std::size_t t = rel / slack_per_slice_;
  const std::size_t within = rel % slack_per_slice_;
  const auto it = std::upper_bound(slack_offset_.begin(), slack_offset_.end(), within);
  const auto core = static_cast<std::size_t>(std::distance(slack_offset_.begin(), it)) - 1;
  return {VariableKind::Slack, t, core, within - slack_offset_[core]};
}

SparseQubo::SparseQubo(std::size_t num_variables, double offset, std::vector<double> linear,
                       std::vector<QuboTerm> quadratic)
    : offset_(offset), linear_(std::move(linear)), quadratic_(std::move(quadratic)) {
  if (linear_.size() != num_variables) {
    throw Error(ErrorKind::InvalidArgument, "linear coefficient count != variable count");
  }
  for (auto& term : quadratic_) {
    if (term.i > term.j) {
      std::swap(term.i, term.j);
    }
    if (term.i == term.j || term.j >= num_variables) {
      throw Error(ErrorKind::InvalidArgument, "quadratic term must join two distinct variables");
    }
  }
  std::sort(quadratic_.begin(), quadratic_.end(), [](const QuboTerm& a, const QuboTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  // Merge duplicates, then drop entries that cancelled to zero.
  std::vector<QuboTerm> merged;
  merged.reserve(quadratic_.size());
  for (const auto& term : quadratic_) {
    if (!merged.empty() && merged.back().i == term.i && merged.back().j == term.j) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(term);
    }
  }
  std::erase_if(merged, [](const QuboTerm& t) { return t.coeff == 0.0; });
  quadratic_ = std::move(merged);
}

double SparseQubo::coefficient(std::size_t i, std::size_t j) const {
  if (i == j) {
    return linear_.at(i);
  }
  if (i > j) {
    std::swap(i, j);
  }
  const auto it = std::lower_bound(
      quadratic_.begin(), quadratic_.end(), std::pair{i, j},
      [](const QuboTerm& t, const std::pair<std::size_t, std::size_t>& key) {
        return t.i != key.first ? t.i < key.first : t.j < key.second;
      });
  if (it != quadratic_.end() && it->i == i && it->j == j) {
    return it->coeff;
  }
  return 0.0;
}

double SparseQubo::energy(const SolutionVector& x) const {
  if (x.size() != linear_.size()) {
    throw Error(ErrorKind::InvalidArgument, "solution length " + std::to_string(x.size()) +
                                                " does not match " +
                                                std::to_string(linear_.size()) + " variables");
  }
  double e = offset_;
  for (std::size_t i = 0; i < linear_.size(); ++i) {
    if (x[i] != 0) {
      e += linear_[i];
    }
  }
  for (const auto& term : quadratic_) {
    if (x[term.i] != 0 && x[term.j] != 0) {
      e += term.coeff;
    }
  }
  return e;
}

namespace {

class Accumulator {
 public:
  explicit Accumulator(std::size_t size) : linear_(size, 0.0) {}

  void add_linear(std::size_t i, double c) { linear_[i] += c; }
  void add_pair(std::size_t i, std::size_t j, double c) {
    if (i == j) {
      // x^2 = x for binary variables.
      linear_[i] += c;
      return;
    }
    terms_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c});
  }
  void add_offset(double c) { offset_ += c; }

  SparseQubo finish() && {
    const std::size_t size = linear_.size();
    return SparseQubo(size, offset_, std::move(linear_), std::move(terms_));
  }

 private:
  double offset_ = 0.0;
  std::vector<double> linear_;
  std::vector<QuboTerm> terms_;
};

}  // namespace

QuboProblem build(const SliceSet& slices, const CoreTopology& topo, const DistanceMatrix& dist,
                  double lambda, std::span<const Core> incoming) {
  const std::size_t n = slices.num_qubits();
  const std::size_t k = topo.num_cores();
  const std::size_t T = slices.size();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::InvalidArgument, "lambda must be a finite value >= 0");
  }
  if (topo.total_capacity() < n) {
    throw Error(ErrorKind::InfeasibleCapacity,
                "total core capacity " + std::to_string(topo.total_capacity()) +
                    " cannot hold " + std::to_string(n) + " qubits");
  }
  if (dist.num_cores() != k) {
    throw Error(ErrorKind::InvalidArgument, "distance matrix does not match the topology");
  }
  if (!incoming.empty() && incoming.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "incoming assignment must cover every qubit");
  }

  VariableIndex index(n, k, T, topo.capacities());
  Accumulator acc(index.size());

  for (std::size_t t = 0; t < T; ++t) {
    // One-hot: (sum_j x_tij - 1)^2 = 1 - sum_j x_tij + 2 sum_{j<l} x_tij x_til.
    for (std::size_t i = 0; i < n; ++i) {
      acc.add_offset(1.0);
      for (std::size_t j = 0; j < k; ++j) {
        acc.add_linear(index.x(t, i, j), -1.0);
        for (std::size_t l = j + 1; l < k; ++l) {
          acc.add_pair(index.x(t, i, j), index.x(t, i, l), 2.0);
        }
      }
    }

    // Capacity: (sum_i x_tij - sum_s y_tjs)^2 per core.
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::pair<std::size_t, double>> group;
      group.reserve(n + topo.capacity(j));
      for (std::size_t i = 0; i < n; ++i) {
        group.emplace_back(index.x(t, i, j), 1.0);
      }
      for (std::size_t s = 0; s < topo.capacity(j); ++s) {
        group.emplace_back(index.y(t, j, s), -1.0);
      }
      for (std::size_t a = 0; a < group.size(); ++a) {
        acc.add_linear(group[a].first, 1.0);
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          acc.add_pair(group[a].first, group[b].first, 2.0 * group[a].second * group[b].second);
        }
      }
    }

    // Cut: x_j^T L_t x_j per core block, read off the Laplacian entries.
    const auto& lap = slices[t].laplacian;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t a = 0; a < n; ++a) {
        if (lap(a, a) != 0) {
          acc.add_linear(index.x(t, a, j), lap(a, a));
        }
        for (std::size_t b = a + 1; b < n; ++b) {
          if (lap(a, b) != 0) {
            acc.add_pair(index.x(t, a, j), index.x(t, b, j), 2.0 * lap(a, b));
          }
        }
      }
    }

    // Transfers between slice t-1 and t.
    if (t > 0 && lambda != 0.0) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t l = 0; l < k; ++l) {
            if (j != l) {
              acc.add_pair(index.x(t - 1, i, j), index.x(t, i, l),
                           lambda * static_cast<double>(dist(j, l)));
            }
          }
        }
      }
    }
  }

  if (!incoming.empty() && T > 0 && lambda != 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const Core prev = incoming[i];
      if (prev == kNoCore) {
        continue;
      }
      if (prev >= k) {
        throw Error(ErrorKind::InvalidArgument, "incoming core out of range");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (l != prev) {
          acc.add_linear(index.x(0, i, l), lambda * static_cast<double>(dist(prev, l)));
        }
      }
    }
  }

  return QuboProblem(std::move(index), lambda, std::move(acc).finish());
}

SlicePenalty slice_penalty(const SolutionVector& x, const VariableIndex& index, std::size_t t,
                           const Slice& slice) {
  const std::size_t n = index.num_qubits();
  const std::size_t k = index.num_cores();
  SlicePenalty p;
  for (std::size_t i = 0; i < n; ++i) {
    double placed = -1.0;
    for (std::size_t j = 0; j < k; ++j) {
      placed += x[index.x(t, i, j)];
    }
    p.one_hot += placed * placed;
  }
  for (std::size_t j = 0; j < k; ++j) {
    double load = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      load += x[index.x(t, i, j)];
    }
    for (std::size_t s = 0; s < index.capacities()[j]; ++s) {
      load -= x[index.y(t, j, s)];
    }
    p.capacity += load * load;
  }
  const auto& lap = slice.laplacian;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t a = 0; a < n; ++a) {
      if (x[index.x(t, a, j)] == 0) {
        continue;
      }
      for (std::size_t b = 0; b < n; ++b) {
        p.cut += lap(a, b) * x[index.x(t, b, j)];
      }
    }
  }
  return p;
}

double assignment_penalty(const SolutionVector& x, const SliceSet& slices,
                          const VariableIndex& index) {
  if (x.size() != index.size() || index.num_slices() != slices.size()) {
    throw Error(ErrorKind::InvalidArgument, "solution does not match the variable layout");
  }
  double total = 0.0;
  for (std::size_t t = 0; t < slices.size(); ++t) {
    total += slice_penalty(x, index, t, slices[t]).total();
  }
  return total;
}

double assignment_penalty(const SolutionVector& x, const SliceSet& slices,
                          const CoreTopology& topo) {
  const VariableIndex index(slices.num_qubits(), topo.num_cores(), slices.size(),
                            topo.capacities());
  return assignment_penalty(x, slices, index);
}

double transfer_cost(const SolutionVector& x, const VariableIndex& index,
                     const DistanceMatrix& dist) {
  if (x.size() != index.size()) {
    throw Error(ErrorKind::InvalidArgument, "solution does not match the variable layout");
  }
  const std::size_t n = index.num_qubits();
  const std::size_t k = index.num_cores();
  double total = 0.0;
  for (std::size_t t = 1; t < index.num_slices(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (x[index.x(t - 1, i, j)] == 0) {
          continue;
        }
        for (std::size_t l = 0; l < k; ++l) {
          if (l != j && x[index.x(t, i, l)] != 0) {
            total += static_cast<double>(dist(j, l));
          }
        }
      }
    }
  }
  return total;
}

double default_lambda(std::size_t num_slices, std::size_t num_qubits) {
  if (num_slices == 0 || num_qubits == 0) {
    throw Error(ErrorKind::InvalidArgument, "default_lambda needs T >= 1 and n >= 1");
  }
  return 0.99 / (static_cast<double>(num_slices) * static_cast<double>(num_qubits));
}

namespace {

std::string format_coeff(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

}  // namespace

void write_qubo_text(std::ostream& out, const SparseQubo& q) {
  out << "# vars " << q.num_variables() << " offset " << format_coeff(q.offset()) << '\n';
  // Row-major over the upper triangle, linear entry first in each row.
  auto quad = q.quadratic().begin();
  for (std::size_t i = 0; i < q.num_variables(); ++i) {
    if (q.linear()[i] != 0.0) {
      out << i << ' ' << i << ' ' << format_coeff(q.linear()[i]) << '\n';
    }
    for (; quad != q.quadratic().end() && quad->i == i; ++quad) {
      out << quad->i << ' ' << quad->j << ' ' << format_coeff(quad->coeff) << '\n';
    }
  }
}

SparseQubo read_qubo_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::MalformedInput, "QUBO text: missing header");
  }
  std::istringstream header(line);
  std::string hash;
  std::string vars_kw;
  std::string offset_kw;
  std::size_t vars = 0;
  double offset = 0.0;
  if (!(header >> hash >> vars_kw >> vars >> offset_kw >> offset) || hash != "#" ||
      vars_kw != "vars" || offset_kw != "offset") {
    throw Error(ErrorKind::MalformedInput, "QUBO text: header must be '# vars <n> offset <c>'");
  }
  std::vector<double> linear(vars, 0.0);
  std::vector<QuboTerm> quadratic;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') {
      continue;
    }
    std::istringstream row(line);
    std::size_t i = 0;
    std::size_t j = 0;
    double c = 0.0;
    if (!(row >> i >> j >> c) || i >= vars || j >= vars) {
      throw Error(ErrorKind::MalformedInput, "QUBO text: bad entry '" + line + "'");
    }
    if (i == j) {
      linear[i] += c;
    } else {
      quadratic.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c});
    }
  }
  return SparseQubo(vars, offset, std::move(linear), std::move(quadratic));
}

}  // namespace qubomap
