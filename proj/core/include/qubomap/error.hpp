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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qubomap {

enum class ErrorKind {
  MalformedInput,
  InvalidCircuit,
  InvalidTopology,
  DisconnectedTopology,
  InfeasibleCapacity,
  UnmappableGate,
  InvalidArgument,
  BudgetExceeded,
  NoValidPartition,
  Io,
};

/// Stable snake_case identifier used in machine-readable error output.
std::string_view to_string(ErrorKind kind);

/**
 * Every failure raised by the library carries an ErrorKind so that the CLI
 * can emit it as structured JSON and sweeps can record it per row.
 */
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qubomap
