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
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "qubomap/architecture.hpp"
#include "qubomap/slicer.hpp"

namespace qubomap {

enum class VariableKind { Assignment, Slack };

/**
 * Flat layout of the binary variables.
 *
 * Assignment bits come first, grouped by slice, then core, then qubit:
 * x(t, i, j) = (t * k + j) * n + i, for N = T * k * n bits in total.
 * One slack bit per capacity slot follows for every (slice, core):
 * y(t, j, s) = N + t * C + (c_0 + ... + c_{j-1}) + s with C = sum_j c_j.
 */
class VariableIndex {
 public:
  VariableIndex(std::size_t n, std::size_t k, std::size_t T, std::vector<std::size_t> capacities);

  struct Decoded {
    VariableKind kind;
    std::size_t slice;
    std::size_t core;
    std::size_t position;  // qubit for assignment bits, slot for slack bits
  };

  [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_cores() const noexcept { return k_; }
  [[nodiscard]] std::size_t num_slices() const noexcept { return T_; }
  [[nodiscard]] const std::vector<std::size_t>& capacities() const noexcept { return caps_; }

  [[nodiscard]] std::size_t assignment_count() const noexcept { return T_ * k_ * n_; }
  [[nodiscard]] std::size_t slack_per_slice() const noexcept { return slack_per_slice_; }
  [[nodiscard]] std::size_t slack_count() const noexcept { return T_ * slack_per_slice_; }
  [[nodiscard]] std::size_t size() const noexcept { return assignment_count() + slack_count(); }
  [[nodiscard]] std::size_t vars_per_slice() const noexcept { return k_ * n_ + slack_per_slice_; }

  [[nodiscard]] std::size_t x(std::size_t t, std::size_t qubit, std::size_t core) const noexcept {
    return (t * k_ + core) * n_ + qubit;
  }
  [[nodiscard]] std::size_t y(std::size_t t, std::size_t core, std::size_t slot) const noexcept {
    return assignment_count() + t * slack_per_slice_ + slack_offset_[core] + slot;
  }

  [[nodiscard]] Decoded decode(std::size_t flat) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t T_;
  std::vector<std::size_t> caps_;
  std::vector<std::size_t> slack_offset_;
  std::size_t slack_per_slice_;
};

class SolutionVector {
 public:
  SolutionVector() = default;
  explicit SolutionVector(std::size_t size) : bits_(size, 0) {}
  explicit SolutionVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t& operator[](std::size_t i) { return bits_[i]; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  [[nodiscard]] std::span<std::uint8_t> bits() noexcept { return bits_; }

  friend bool operator==(const SolutionVector&, const SolutionVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct QuboTerm {
  std::uint32_t i;
  std::uint32_t j;
  double coeff;
};

/**
 * Sparse quadratic form sum_i a_i x_i + sum_{i<j} b_ij x_i x_j + offset.
 * Quadratic terms are kept sorted by (i, j) with i < j and no zero entries.
 */
class SparseQubo {
 public:
  SparseQubo(std::size_t num_variables, double offset, std::vector<double> linear,
             std::vector<QuboTerm> quadratic);

  [[nodiscard]] std::size_t num_variables() const noexcept { return linear_.size(); }
  [[nodiscard]] double offset() const noexcept { return offset_; }
  [[nodiscard]] const std::vector<double>& linear() const noexcept { return linear_; }
  [[nodiscard]] const std::vector<QuboTerm>& quadratic() const noexcept { return quadratic_; }

  /// Coefficient of x_i x_j (the linear coefficient when i == j).
  [[nodiscard]] double coefficient(std::size_t i, std::size_t j) const;

  /// x^T Q x + offset. Throws Error(InvalidArgument) on length mismatch.
  [[nodiscard]] double energy(const SolutionVector& x) const;

 private:
  double offset_;
  std::vector<double> linear_;
  std::vector<QuboTerm> quadratic_;
};

/// The mapping objective: assignment penalty + lambda * transfer cost.
class QuboProblem {
 public:
  QuboProblem(VariableIndex index, double lambda, SparseQubo matrix)
      : index_(std::move(index)), lambda_(lambda), matrix_(std::move(matrix)) {}

  [[nodiscard]] const VariableIndex& index() const noexcept { return index_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] const SparseQubo& matrix() const noexcept { return matrix_; }
  [[nodiscard]] double offset() const noexcept { return matrix_.offset(); }
  [[nodiscard]] std::size_t num_variables() const noexcept { return matrix_.num_variables(); }
  [[nodiscard]] double energy(const SolutionVector& x) const { return matrix_.energy(x); }

 private:
  VariableIndex index_;
  double lambda_;
  SparseQubo matrix_;
};

inline constexpr Core kNoCore = static_cast<Core>(-1);

/**
 * Assembles the objective over `slices` on `topo`.
 *
 * `incoming`, when non-empty, holds the core of every qubit in the slice that
 * precedes slices[0]; the transfer into slices[0] is then charged as the
 * linear bias lambda * d(prev, l) on x(0, i, l). Entries equal to kNoCore are
 * ignored.
 *
 * Throws Error(InfeasibleCapacity) when the cores cannot hold n qubits and
 * Error(InvalidArgument) for a negative lambda or mismatched distances.
 */
QuboProblem build(const SliceSet& slices, const CoreTopology& topo, const DistanceMatrix& dist,
                  double lambda, std::span<const Core> incoming = {});

/// Per-slice penalty split into its three sums.
struct SlicePenalty {
  double one_hot = 0;   // each qubit on exactly one core
  double capacity = 0;  // load minus occupied slack slots, squared
  double cut = 0;       // Laplacian quadratic form per core block

  [[nodiscard]] double total() const noexcept { return one_hot + capacity + cut; }
};

/// Evaluated straight from the defining sums, never from the matrix.
SlicePenalty slice_penalty(const SolutionVector& x, const VariableIndex& index, std::size_t t,
                           const Slice& slice);
double assignment_penalty(const SolutionVector& x, const SliceSet& slices,
                          const CoreTopology& topo);
double assignment_penalty(const SolutionVector& x, const SliceSet& slices,
                          const VariableIndex& index);

/// sum over consecutive slices, qubits and core pairs j != l of
/// d_jl * x(t-1, i, j) * x(t, i, l).
double transfer_cost(const SolutionVector& x, const VariableIndex& index,
                     const DistanceMatrix& dist);

/// 0.99 / (T * n): keeps lambda * transfer_cost below 1 on all-to-all layouts.
double default_lambda(std::size_t num_slices, std::size_t num_qubits);

/// Plain-text export: header `# vars <total> offset <value>` then `i j coeff`
/// per nonzero entry (linear entries written as `i i coeff`).
void write_qubo_text(std::ostream& out, const SparseQubo& q);
SparseQubo read_qubo_text(std::istream& in);

}  // namespace qubomap
