// Copyright 2026 The holotoric Authors
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
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "holotoric/phase_partition.hpp"
#include "holotoric/statevec.hpp"

namespace holotoric {
namespace {

std::set<std::string> strings(const std::vector<BasisIndex>& xs, int n) {
  std::set<std::string> out;
  for (auto x : xs) out.insert(to_bitstring(x, n));
  return out;
}

TEST(PartitionVertices, ListedGroupings) {
  auto p = partition_vertices(2, GatePlacement(1, 2));
  EXPECT_EQ(strings(p.class_phi1, 2), (std::set<std::string>{"00", "11"}));
  EXPECT_EQ(strings(p.class_phi2, 2), (std::set<std::string>{"01", "10"}));

  p = partition_vertices(3, GatePlacement(1, 2));
  EXPECT_EQ(strings(p.class_phi1, 3), (std::set<std::string>{"000", "001", "110", "111"}));

  p = partition_vertices(4, GatePlacement(1, 2));
  EXPECT_EQ(strings(p.class_phi1, 4),
            (std::set<std::string>{"0000", "0001", "0010", "0011", "1100", "1101", "1110",
                                   "1111"}));
}

TEST(PartitionVertices, TrailingPairMatchesBruteForce) {
  // Oracle: enumerate all strings and compare characters 2 and 3.
  std::set<std::string> phi1;
  for (const char* s : {"000", "001", "010", "011", "100", "101", "110", "111"}) {
    if (s[1] == s[2]) phi1.insert(s);
  }
  EXPECT_EQ(phi1, (std::set<std::string>{"000", "011", "100", "111"}));
  const auto p = partition_vertices(3, GatePlacement(2, 3));
  EXPECT_EQ(strings(p.class_phi1, 3), phi1);
}

TEST(PartitionVertices, Errors) {
  EXPECT_THROW(partition_vertices(1, GatePlacement(1, 2)), InvalidArgument);
  EXPECT_THROW(partition_vertices(3, GatePlacement(1, 4)), InvalidArgument);
  EXPECT_THROW(partition_vertices(25, GatePlacement(1, 2)), InvalidArgument);
}

TEST(PartitionVertices, PartitionLaw) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& pl : all_placements(n)) {
      const auto p = partition_vertices(n, pl);
      const std::size_t half = std::size_t{1} << (n - 1);
      ASSERT_EQ(p.class_phi1.size(), half);
      ASSERT_EQ(p.class_phi2.size(), half);
      std::vector<BasisIndex> all;
      std::merge(p.class_phi1.begin(), p.class_phi1.end(), p.class_phi2.begin(),
                 p.class_phi2.end(), std::back_inserter(all));
      for (std::size_t i = 0; i < all.size(); ++i) ASSERT_EQ(all[i], i);
      const auto q = partition_vertices(n, pl.swapped());
      EXPECT_EQ(p.class_phi1, q.class_phi1);
      EXPECT_EQ(p.class_phi2, q.class_phi2);
    }
  }
}

TEST(PartitionVertices, AgreesWithStateVectorClasses) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0.05, std::numbers::pi - 0.05);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& pl : all_placements(n)) {
      // phi1 in (0, pi) keeps e^{i phi1} != e^{-i phi1}.
      const double phi = angle(rng);
      const auto g = DiagonalTwoQubitGated::from_phases(phi, -phi);
      const auto classes = extract_phase_classes(
          apply_cphase(uniform_superposition<double>(n), g, pl), kPhaseClassTolerance);
      const auto p = partition_vertices(n, pl);
      ASSERT_EQ(classes.size(), 2u);
      // Index 0 has equal bits everywhere, so the first class is always phi1.
      EXPECT_EQ(classes[0], p.class_phi1);
      EXPECT_EQ(classes[1], p.class_phi2);
    }
  }
}

TEST(ClassGraph, SmallCases) {
  const auto p2 = partition_vertices(2, GatePlacement(1, 2));
  const auto g2 = class_graph(p2, PhaseClass::kPhi1);
  ASSERT_EQ(g2.edges.size(), 1u);
  EXPECT_EQ(g2.edges[0], std::make_pair(BasisIndex{0b00}, BasisIndex{0b11}));
  EXPECT_TRUE(g2.is_diagonal(g2.edges[0]));

  // Explicit enumeration: 000-001 and 110-111 flip bit 3; 000-110 and
  // 001-111 are the diagonals.
  const auto p3 = partition_vertices(3, GatePlacement(1, 2));
  const auto g3 = class_graph(p3, PhaseClass::kPhi1);
  const std::vector<std::pair<BasisIndex, BasisIndex>> want{
      {0b000, 0b001}, {0b000, 0b110}, {0b001, 0b111}, {0b110, 0b111}};
  EXPECT_EQ(g3.edges, want);
  EXPECT_EQ(std::count_if(g3.edges.begin(), g3.edges.end(),
                          [&](const auto& e) { return g3.is_diagonal(e); }),
            2);
}

TEST(ClassGraph, RegularConnectedHypercubes) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& pl : all_placements(n)) {
      const auto p = partition_vertices(n, pl);
      for (auto which : {PhaseClass::kPhi1, PhaseClass::kPhi2}) {
        const auto g = class_graph(p, which);
        const auto deg = g.degrees();
        ASSERT_TRUE(std::all_of(deg.begin(), deg.end(), [&](int d) { return d == n - 1; }));
        ASSERT_TRUE(g.is_connected());
        const auto check = is_hypercube_isomorphic(g);
        ASSERT_TRUE(check.isomorphic) << check.failure;
        ASSERT_EQ(check.witness.size(), g.vertices.size());
      }
    }
  }
}

TEST(HypercubeCheck, IndependentRelabelingComparison) {
  // Oracle for n = 4..8: apply the drop-target map, then compare adjacency
  // matrices directly against the one-bit-difference rule.
  for (int n = 4; n <= 8; ++n) {
    const GatePlacement pl(2, n);
    const auto g = class_graph(partition_vertices(n, pl), PhaseClass::kPhi2);
    const auto check = is_hypercube_isomorphic(g);
    ASSERT_TRUE(check.isomorphic);
    const std::size_t m = std::size_t{1} << (n - 1);
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (const auto& [a, b] : g.edges) {
      const auto ia = std::lower_bound(g.vertices.begin(), g.vertices.end(), a) - g.vertices.begin();
      const auto ib = std::lower_bound(g.vertices.begin(), g.vertices.end(), b) - g.vertices.begin();
      const auto wa = check.witness[static_cast<std::size_t>(ia)];
      const auto wb = check.witness[static_cast<std::size_t>(ib)];
      adj[wa][wb] = adj[wb][wa] = true;
    }
    std::size_t edges = 0;
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        const bool cube = __builtin_popcountll(x ^ y) == 1;
        ASSERT_EQ(adj[x][y], cube) << n << ": " << x << "," << y;
        edges += (cube && x < y);
      }
    }
    EXPECT_EQ(edges, static_cast<std::size_t>(n - 1) * (m / 2));
  }
}

TEST(HypercubeCheck, ReportsFailures) {
  auto g = class_graph(partition_vertices(3, GatePlacement(1, 2)), PhaseClass::kPhi1);
  g.edges.pop_back();
  auto check = is_hypercube_isomorphic(g);
  EXPECT_FALSE(check.isomorphic);
  EXPECT_NE(check.failure.find("edge count"), std::string::npos);

  // Swap a genuine edge for a non-cube edge.
  g = class_graph(partition_vertices(3, GatePlacement(1, 2)), PhaseClass::kPhi1);
  g.edges[0] = {0b000, 0b111};
  check = is_hypercube_isomorphic(g);
  EXPECT_FALSE(check.isomorphic);
  EXPECT_NE(check.failure.find("does not map"), std::string::npos);

  // A vertex set on which dropping the target bit is not injective.
  g = class_graph(partition_vertices(3, GatePlacement(1, 2)), PhaseClass::kPhi1);
  g.vertices = {0b000, 0b001, 0b010, 0b011};
  check = is_hypercube_isomorphic(g);
  EXPECT_FALSE(check.isomorphic);
  EXPECT_NE(check.failure.find("injective"), std::string::npos);
}

TEST(DropBit, Examples) {
  EXPECT_EQ(drop_bit(0b1011, 4, 2), BasisIndex{0b111});
  EXPECT_EQ(drop_bit(0b1011, 4, 4), BasisIndex{0b101});
  EXPECT_EQ(drop_bit(0b1011, 4, 1), BasisIndex{0b011});
}

TEST(IntersectionSummary, CrossingEdges) {
  // Oracle: enumerate square and cube edges by hand-coded pairs.
  const auto s2 = intersection_summary(partition_vertices(2, GatePlacement(1, 2)));
  EXPECT_EQ(s2.shared_vertices, 0u);
  EXPECT_EQ(s2.ambient_edges, 4u);
  EXPECT_EQ(s2.crossing_edges, 4u);

  std::size_t oracle = 0;
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned bit : {4u, 2u, 1u})
      if ((x ^ bit) > x && (bit == 4u || bit == 2u)) ++oracle;
  EXPECT_EQ(oracle, 8u);
  const auto s3 = intersection_summary(partition_vertices(3, GatePlacement(1, 2)));
  EXPECT_EQ(s3.ambient_edges, 12u);
  EXPECT_EQ(s3.crossing_edges, oracle);

  for (int n = 2; n <= 12; ++n) {
    for (const auto& pl : all_placements(n)) {
      const auto s = intersection_summary(partition_vertices(n, pl));
      EXPECT_EQ(s.shared_vertices, 0u);
      EXPECT_EQ(s.crossing_edges, std::uint64_t{1} << n);
      EXPECT_EQ(s.ambient_edges, static_cast<std::uint64_t>(n) << (n - 1));
    }
  }
}

TEST(PartitionText, FormatAndParse) {
  const auto p = partition_vertices(3, GatePlacement(2, 3));
  const std::string text = format_partition(p);
  EXPECT_EQ(text, "n=3 control=2 target=3\nphi1: 000 011 100 111\nphi2: 001 010 101 110\n");
  std::istringstream is(text);
  const auto back = read_partition(is);
  EXPECT_EQ(back.class_phi1, p.class_phi1);
  EXPECT_EQ(back.placement, p.placement);

  auto parse = [](const std::string& t) {
    std::istringstream in(t);
    return read_partition(in);
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("n=2 control=1\nphi1: 00 11\nphi2: 01 10\n"), ParseError);
  EXPECT_THROW(parse("n=2 control=1 target=2\nphi1: 00 11\n"), ParseError);
  EXPECT_THROW(parse("n=2 control=1 target=2\nphi1: 00 01\nphi2: 11 10\n"), ParseError);
  EXPECT_THROW(parse("n=2 control=1 target=2\nphi2: 01 10\nphi1: 00 11\n"), ParseError);
}

}  // namespace
}  // namespace holotoric
