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
#include <optional>
#include <string>
#include <string_view>

#include "qubomap/circuit.hpp"

namespace qubomap::bench {

enum class Family { Qft, MultiTarget, CuccaroAdder, DraperAdder, Random, QuantumVolume };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

/// Depth interval of a named random-circuit preset (XS, S, M, L).
struct DepthRange {
  std::size_t min;
  std::size_t max;
};
DepthRange random_preset(std::string_view name);

struct BenchSpec {
  Family family = Family::Qft;
  std::size_t n = 2;
  std::optional<std::size_t> depth;   // random
  std::optional<std::string> preset;  // random, when depth is unset
  std::optional<std::size_t> layers;  // quantum_volume; defaults to n
  std::uint64_t seed = 0;
};

/// Gates (0, i) for i = 1 .. n-1.
Circuit multi_target(std::size_t n);

/// Two same-pair interactions per controlled phase, for every pair i < j.
Circuit qft(std::size_t n);

/// Ripple-carry adder on 2m + 1 qubits (carry-in, a[m], b[m]); n must be odd.
Circuit cuccaro_adder(std::size_t n);

/// QFT adder on 2m qubits (a[m], b[m]); n must be even.
Circuit draper_adder(std::size_t n);

/// `depth` layers, each a uniformly random maximal pairing of the qubits.
Circuit random_circuit(std::size_t n, std::size_t depth, std::uint64_t seed);

/// `layers` layers of a random permutation paired off, three gates per pair.
Circuit quantum_volume(std::size_t n, std::size_t layers, std::uint64_t seed);

Circuit generate(const BenchSpec& spec);

}  // namespace qubomap::bench
