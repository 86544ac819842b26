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

#include "qubomap/error.hpp"

namespace qubomap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
      return "malformed_input";
    case ErrorKind::InvalidCircuit:
      return "invalid_circuit";
    case ErrorKind::InvalidTopology:
      return "invalid_topology";
    case ErrorKind::DisconnectedTopology:
      return "disconnected_topology";
    case ErrorKind::InfeasibleCapacity:
      return "infeasible_capacity";
    case ErrorKind::UnmappableGate:
      return "unmappable_gate";
    case ErrorKind::InvalidArgument:
      return "invalid_argument";
    case ErrorKind::BudgetExceeded:
      return "budget_exceeded";
    case ErrorKind::NoValidPartition:
      return "no_valid_partition";
    case ErrorKind::Io:
      return "io_error";
  }
  return "unknown";
}

}  // namespace qubomap
