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

#include "qubomap/architecture.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qubomap/error.hpp"

namespace qubomap {

CoreTopology::CoreTopology(std::vector<std::size_t> capacities, std::vector<Link> links)
    : capacities_(std::move(capacities)) {
  const std::size_t k = capacities_.size();
  if (k == 0) {
    throw Error(ErrorKind::InvalidTopology, "topology needs at least one core");
  }
  if (std::any_of(capacities_.begin(), capacities_.end(), [](std::size_t c) { return c == 0; })) {
    throw Error(ErrorKind::InvalidTopology, "core capacities must be >= 1");
  }
  for (auto& [a, b] : links) {
    if (a >= k || b >= k) {
      throw Error(ErrorKind::InvalidTopology, "link endpoint out of range");
    }
    if (a == b) {
      throw Error(ErrorKind::InvalidTopology, "self-link on core " + std::to_string(a));
    }
    if (a > b) {
      std::swap(a, b);
    }
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  links_ = std::move(links);
}

std::size_t CoreTopology::total_capacity() const noexcept {
  return std::accumulate(capacities_.begin(), capacities_.end(), std::size_t{0});
}

std::size_t CoreTopology::max_capacity() const noexcept {
  return *std::max_element(capacities_.begin(), capacities_.end());
}

bool CoreTopology::uniform_capacity() const noexcept {
  return std::adjacent_find(capacities_.begin(), capacities_.end(), std::not_equal_to<>()) ==
         capacities_.end();
}

CoreTopology all_to_all(std::size_t cores, std::size_t capacity) {
  std::vector<Link> links;
  for (Core a = 0; a < cores; ++a) {
    for (Core b = a + 1; b < cores; ++b) {
      links.emplace_back(a, b);
    }
  }
  return CoreTopology(std::vector<std::size_t>(cores, capacity), std::move(links));
}

CoreTopology grid(std::size_t rows, std::size_t cols, std::size_t capacity) {
  if (rows * cols == 0) {
    throw Error(ErrorKind::InvalidTopology, "grid needs rows * cols >= 1");
  }
  std::vector<Link> links;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Core here = r * cols + c;
      if (c + 1 < cols) {
        links.emplace_back(here, here + 1);
      }
      if (r + 1 < rows) {
        links.emplace_back(here, here + cols);
      }
    }
  }
  return CoreTopology(std::vector<std::size_t>(rows * cols, capacity), std::move(links));
}

CoreTopology parse_topology(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("topology JSON: ") + e.what());
  }
  try {
    const auto cores = doc.at("cores").get<long long>();
    const auto caps = doc.at("capacities").get<std::vector<long long>>();
    if (cores < 1 || static_cast<std::size_t>(cores) != caps.size()) {
      throw Error(ErrorKind::InvalidTopology,
                  "topology JSON: \"capacities\" must list one entry per core");
    }
    std::vector<std::size_t> capacities;
    for (const auto c : caps) {
      if (c < 1) {
        throw Error(ErrorKind::InvalidTopology, "core capacities must be >= 1");
      }
      capacities.push_back(static_cast<std::size_t>(c));
    }
    std::vector<Link> links;
    for (const auto& l : doc.value("links", nlohmann::json::array())) {
      const auto ends = l.get<std::vector<long long>>();
      if (ends.size() != 2 || ends[0] < 0 || ends[1] < 0) {
        throw Error(ErrorKind::InvalidTopology, "topology JSON: links are [a, b] core pairs");
      }
      links.emplace_back(static_cast<Core>(ends[0]), static_cast<Core>(ends[1]));
    }
    return CoreTopology(std::move(capacities), std::move(links));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("topology JSON: ") + e.what());
  }
}

std::string to_json_string(const CoreTopology& topo) {
  nlohmann::ordered_json doc;
  doc["cores"] = topo.num_cores();
  doc["capacities"] = topo.capacities();
  auto links = nlohmann::ordered_json::array();
  for (const auto& [a, b] : topo.links()) {
    links.push_back({a, b});
  }
  doc["links"] = links;
  return doc.dump() + "\n";
}

namespace {

std::vector<std::size_t> parse_size_list(std::string_view text, std::string_view spec) {
  std::vector<std::size_t> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw Error(ErrorKind::InvalidArgument, "bad topology spec '" + std::string(spec) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace

CoreTopology parse_topology_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument,
                "topology spec must be all2all:k,c | grid:r,c,cap | file:<path>");
  }
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "file") {
    std::ifstream in{std::string(rest)};
    if (!in) {
      throw Error(ErrorKind::Io, "cannot open topology file '" + std::string(rest) + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_topology(buf.str());
  }
  const auto values = parse_size_list(rest, spec);
  if (kind == "all2all" && values.size() == 2) {
    return all_to_all(values[0], values[1]);
  }
  if (kind == "grid" && values.size() == 3) {
    return grid(values[0], values[1], values[2]);
  }
  throw Error(ErrorKind::InvalidArgument, "bad topology spec '" + std::string(spec) + "'");
}

DistanceMatrix::DistanceMatrix(std::size_t k, std::vector<std::size_t> hops)
    : k_(k), hops_(std::move(hops)) {
  if (hops_.size() != k_ * k_) {
    throw Error(ErrorKind::InvalidArgument, "distance matrix must be k x k");
  }
}

bool DistanceMatrix::all_unit() const noexcept {
  for (Core j = 0; j < k_; ++j) {
    for (Core l = 0; l < k_; ++l) {
      if (j != l && (*this)(j, l) != 1) {
        return false;
      }
    }
  }
  return true;
}

std::size_t DistanceMatrix::diameter() const noexcept {
  return hops_.empty() ? 0 : *std::max_element(hops_.begin(), hops_.end());
}

DistanceMatrix hop_matrix(const CoreTopology& topo) {
  const std::size_t k = topo.num_cores();
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<Core>> adjacency(k);
  for (const auto& [a, b] : topo.links()) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<std::size_t> hops(k * k, kUnreached);
  for (Core src = 0; src < k; ++src) {
    auto* row = &hops[src * k];
    std::queue<Core> frontier;
    row[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const Core u = frontier.front();
      frontier.pop();
      for (const Core v : adjacency[u]) {
        if (row[v] == kUnreached) {
          row[v] = row[u] + 1;
          frontier.push(v);
        }
      }
    }
    for (Core dst = 0; dst < k; ++dst) {
      if (row[dst] == kUnreached) {
        throw Error(ErrorKind::DisconnectedTopology,
                    "cores " + std::to_string(src) + " and " + std::to_string(dst) +
                        " are not connected");
      }
    }
  }
  return DistanceMatrix(k, std::move(hops));
}

}  // namespace qubomap
