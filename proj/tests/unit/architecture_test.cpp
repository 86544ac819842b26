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

#include <cstdio>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qubomap/architecture.hpp"
#include "qubomap/error.hpp"

namespace qubomap {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected qubomap::Error";
  return ErrorKind::Io;
}

TEST(Topology, AllToAll) {
  const auto t = all_to_all(3, 2);
  EXPECT_EQ(t.num_cores(), 3u);
  EXPECT_EQ(t.total_capacity(), 6u);
  EXPECT_EQ(t.links().size(), 3u);
  EXPECT_TRUE(t.uniform_capacity());
  const auto d = hop_matrix(t);
  EXPECT_TRUE(d.all_unit());
  EXPECT_EQ(d.diameter(), 1u);
}

TEST(Topology, SingleCoreHasZeroDistances) {
  const auto d = hop_matrix(all_to_all(1, 4));
  EXPECT_EQ(d(0, 0), 0u);
  EXPECT_TRUE(d.all_unit());
}

TEST(Topology, GridDistancesAreManhattan) {
  const auto t = grid(3, 4, 2);
  const auto d = hop_matrix(t);
  for (Core a = 0; a < 12; ++a) {
    for (Core b = 0; b < 12; ++b) {
      const auto dr = a / 4 > b / 4 ? a / 4 - b / 4 : b / 4 - a / 4;
      const auto dc = a % 4 > b % 4 ? a % 4 - b % 4 : b % 4 - a % 4;
      EXPECT_EQ(d(a, b), dr + dc);
    }
  }
  EXPECT_EQ(d.diameter(), 5u);
  EXPECT_FALSE(d.all_unit());
}

TEST(Topology, PathOfThree) {
  const CoreTopology t({2, 2, 2}, {{0, 1}, {1, 2}});
  const auto d = hop_matrix(t);
  EXPECT_EQ(d(0, 2), 2u);
  EXPECT_EQ(d(2, 1), 1u);
}

TEST(Topology, DisconnectedIsRejected) {
  const CoreTopology t({2, 2, 2}, {{0, 1}});
  EXPECT_EQ(kind_of([&] { (void)hop_matrix(t); }), ErrorKind::DisconnectedTopology);
}

TEST(Topology, InvalidDefinitions) {
  EXPECT_EQ(kind_of([] { CoreTopology({}, {}); }), ErrorKind::InvalidTopology);
  EXPECT_EQ(kind_of([] { CoreTopology({0, 1}, {{0, 1}}); }), ErrorKind::InvalidTopology);
  EXPECT_EQ(kind_of([] { CoreTopology({1, 1}, {{0, 2}}); }), ErrorKind::InvalidTopology);
  EXPECT_EQ(kind_of([] { CoreTopology({1, 1}, {{1, 1}}); }), ErrorKind::InvalidTopology);
}

TEST(Topology, DuplicateLinksCollapse) {
  const CoreTopology t({1, 1}, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(t.links().size(), 1u);
}

TEST(Topology, JsonRoundTripAndSpecs) {
  const CoreTopology t({2, 3, 1}, {{0, 1}, {1, 2}});
  const auto back = parse_topology(to_json_string(t));
  EXPECT_EQ(back.capacities(), t.capacities());
  EXPECT_EQ(back.links(), t.links());

  EXPECT_EQ(parse_topology_spec("all2all:3,2").total_capacity(), 6u);
  EXPECT_EQ(parse_topology_spec("grid:2,2,5").num_cores(), 4u);
  EXPECT_EQ(kind_of([] { (void)parse_topology_spec("ring:3"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { (void)parse_topology_spec("grid:2,x,3"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { (void)parse_topology_spec("file:/nonexistent/topo.json"); }),
            ErrorKind::Io);
  EXPECT_EQ(kind_of([] { (void)parse_topology(R"({"cores":2,"capacities":[1]})"); }),
            ErrorKind::InvalidTopology);
  EXPECT_EQ(kind_of([] { (void)parse_topology("[1,2"); }), ErrorKind::MalformedInput);
}

TEST(Topology, FileSpec) {
  const std::string path = ::testing::TempDir() + "qubomap_topology.json";
  std::ofstream(path) << R"({"cores": 2, "capacities": [3, 3], "links": [[0, 1]]})";
  const auto t = parse_topology_spec("file:" + path);
  EXPECT_EQ(t.total_capacity(), 6u);
  std::remove(path.c_str());
}

// BFS against Floyd-Warshall on random connected graphs.
TEST(TopologyProperties, HopMatrixMatchesFloydWarshall) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    std::vector<Link> links;
    for (std::size_t j = 1; j < k; ++j)
      links.emplace_back(std::uniform_int_distribution<std::size_t>(0, j - 1)(rng), j);
    for (std::size_t extra = 0; extra < k; ++extra) {
      const auto a = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
      const auto b = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
      if (a != b) links.emplace_back(a, b);
    }
    const auto d = hop_matrix(CoreTopology(std::vector<std::size_t>(k, 1), links));
    const auto ref = oracle::hops_floyd(k, links);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        ASSERT_EQ(d(a, b), ref[a][b]);
        ASSERT_EQ(d(a, b), d(b, a));
      }
    }
  }
}

}  // namespace
}  // namespace qubomap
