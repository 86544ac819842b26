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

#include "qubomap/benchgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qubomap/error.hpp"

namespace qubomap::bench {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw Error(ErrorKind::InvalidArgument, message);
  }
}

void controlled_phase(std::vector<Gate>& out, Qubit control, Qubit target) {
  out.push_back({control, target});
  out.push_back({control, target});
}

// Toffoli as its standard 6-CNOT network; only the interacting pairs matter.
void toffoli(std::vector<Gate>& out, Qubit c1, Qubit c2, Qubit target) {
  out.push_back({c2, target});
  out.push_back({c1, target});
  out.push_back({c2, target});
  out.push_back({c1, target});
  out.push_back({c1, c2});
  out.push_back({c1, c2});
}

void majority(std::vector<Gate>& out, Qubit c, Qubit b, Qubit a) {
  out.push_back({a, b});
  out.push_back({a, c});
  toffoli(out, c, b, a);
}

void unmajority_add(std::vector<Gate>& out, Qubit c, Qubit b, Qubit a) {
  toffoli(out, c, b, a);
  out.push_back({a, c});
  out.push_back({c, b});
}

// Controlled-phase ladder of the QFT without final swaps; the inverse is the
// same ladder reversed.
std::vector<std::pair<Qubit, Qubit>> qft_ladder(const std::vector<Qubit>& reg) {
  std::vector<std::pair<Qubit, Qubit>> pairs;
  for (std::size_t j = reg.size(); j-- > 0;) {
    for (std::size_t k = j; k-- > 0;) {
      pairs.emplace_back(reg[j], reg[k]);
    }
  }
  return pairs;
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "qft") return Family::Qft;
  if (name == "multi_target") return Family::MultiTarget;
  if (name == "cuccaro_adder") return Family::CuccaroAdder;
  if (name == "draper_adder") return Family::DraperAdder;
  if (name == "random") return Family::Random;
  if (name == "quantum_volume") return Family::QuantumVolume;
  throw Error(ErrorKind::InvalidArgument, "unknown benchmark family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Qft: return "qft";
    case Family::MultiTarget: return "multi_target";
    case Family::CuccaroAdder: return "cuccaro_adder";
    case Family::DraperAdder: return "draper_adder";
    case Family::Random: return "random";
    case Family::QuantumVolume: return "quantum_volume";
  }
  return "unknown";
}

DepthRange random_preset(std::string_view name) {
  if (name == "XS") return {13, 19};
  if (name == "S") return {38, 54};
  if (name == "M") return {88, 120};
  if (name == "L") return {529, 596};
  throw Error(ErrorKind::InvalidArgument, "unknown random preset '" + std::string(name) + "'");
}

Circuit multi_target(std::size_t n) {
  require(n >= 2, "multi_target needs n >= 2");
  std::vector<Gate> gates;
  for (Qubit i = 1; i < n; ++i) {
    gates.push_back({0, i});
  }
  return Circuit(n, std::move(gates));
}

Circuit qft(std::size_t n) {
  require(n >= 2, "qft needs n >= 2");
  std::vector<Gate> gates;
  for (Qubit i = 0; i < n; ++i) {
    for (Qubit j = i + 1; j < n; ++j) {
      controlled_phase(gates, i, j);
    }
  }
  return Circuit(n, std::move(gates));
}

Circuit cuccaro_adder(std::size_t n) {
  require(n >= 3 && n % 2 == 1, "cuccaro_adder needs an odd n >= 3 (carry-in + 2m qubits)");
  const std::size_t m = (n - 1) / 2;
  const Qubit cin = 0;
  auto a = [](std::size_t i) { return static_cast<Qubit>(1 + i); };
  auto b = [m](std::size_t i) { return static_cast<Qubit>(1 + m + i); };

  std::vector<Gate> gates;
  majority(gates, cin, b(0), a(0));
  for (std::size_t i = 1; i < m; ++i) {
    majority(gates, a(i - 1), b(i), a(i));
  }
  for (std::size_t i = m; i-- > 1;) {
    unmajority_add(gates, a(i - 1), b(i), a(i));
  }
  unmajority_add(gates, cin, b(0), a(0));
  return Circuit(n, std::move(gates));
}

Circuit draper_adder(std::size_t n) {
  require(n >= 2 && n % 2 == 0, "draper_adder needs an even n >= 2 (a[m] + b[m])");
  const std::size_t m = n / 2;
  std::vector<Qubit> reg_a(m);
  std::vector<Qubit> reg_b(m);
  std::iota(reg_a.begin(), reg_a.end(), Qubit{0});
  std::iota(reg_b.begin(), reg_b.end(), static_cast<Qubit>(m));

  std::vector<Gate> gates;
  const auto ladder = qft_ladder(reg_b);
  for (const auto& [c, t] : ladder) {
    controlled_phase(gates, c, t);
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m - j; ++k) {
      controlled_phase(gates, reg_a[j], reg_b[j + k]);
    }
  }
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
    controlled_phase(gates, it->first, it->second);
  }
  return Circuit(n, std::move(gates));
}

Circuit random_circuit(std::size_t n, std::size_t depth, std::uint64_t seed) {
  require(n >= 2, "random circuit needs n >= 2");
  require(depth >= 1, "random circuit needs depth >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Qubit> order(n);
  std::iota(order.begin(), order.end(), Qubit{0});
  std::vector<Gate> gates;
  for (std::size_t layer = 0; layer < depth; ++layer) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t p = 0; p + 1 < n; p += 2) {
      gates.push_back({order[p], order[p + 1]});
    }
  }
  return Circuit(n, std::move(gates));
}

Circuit quantum_volume(std::size_t n, std::size_t layers, std::uint64_t seed) {
  require(n >= 2, "quantum_volume needs n >= 2");
  require(layers >= 1, "quantum_volume needs layers >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Qubit> order(n);
  std::iota(order.begin(), order.end(), Qubit{0});
  std::vector<Gate> gates;
  for (std::size_t layer = 0; layer < layers; ++layer) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t p = 0; p + 1 < n; p += 2) {
      // Two-qubit SU(4) block: three CNOTs on the pair.
      for (int rep = 0; rep < 3; ++rep) {
        gates.push_back({order[p], order[p + 1]});
      }
    }
  }
  return Circuit(n, std::move(gates));
}

Circuit generate(const BenchSpec& spec) {
  switch (spec.family) {
    case Family::Qft:
      return qft(spec.n);
    case Family::MultiTarget:
      return multi_target(spec.n);
    case Family::CuccaroAdder:
      return cuccaro_adder(spec.n);
    case Family::DraperAdder:
      return draper_adder(spec.n);
    case Family::Random: {
      std::size_t depth = 0;
      if (spec.depth) {
        depth = *spec.depth;
      } else {
        const auto range = random_preset(spec.preset.value_or("XS"));
        // Separate stream from the one that draws the pairings.
        std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                          static_cast<std::uint32_t>(spec.seed >> 32), 0xDE97u};
        std::mt19937_64 rng(seq);
        depth = std::uniform_int_distribution<std::size_t>(range.min, range.max)(rng);
      }
      return random_circuit(spec.n, depth, spec.seed);
    }
    case Family::QuantumVolume:
      return quantum_volume(spec.n, spec.layers.value_or(spec.n), spec.seed);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown benchmark family");
}

}  // namespace qubomap::bench
