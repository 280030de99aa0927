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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "holotoric/bits.hpp"
#include "holotoric/statevec.hpp"

namespace holotoric {

/// Vertices of the n-cube split by the phase the diagonal gate assigns them.
/// class_phi1 holds strings whose control and target bits agree.
struct PhasePartition {
  int n_qubits;
  GatePlacement placement;
  std::vector<BasisIndex> class_phi1;  // ascending
  std::vector<BasisIndex> class_phi2;  // ascending
};

enum class PhaseClass { kPhi1, kPhi2 };

/// One phase class with its hypercube adjacency: flip one bit outside
/// {control, target}, or flip control and target together (the diagonal).
struct ClassGraph {
  int n_qubits;
  GatePlacement placement;
  std::vector<BasisIndex> vertices;                     // ascending
  std::vector<std::pair<BasisIndex, BasisIndex>> edges;  // first < second, sorted

  bool is_diagonal(const std::pair<BasisIndex, BasisIndex>& edge) const;
  std::vector<int> degrees() const;
  bool is_connected() const;
};

struct HypercubeCheck {
  bool isomorphic = false;
  /// witness[i] is the (n-1)-bit image of graph.vertices[i] under the
  /// drop-target-bit map.
  std::vector<BasisIndex> witness;
  /// Empty when isomorphic; otherwise why the witness fails.
  std::string failure;
};

struct IntersectionSummary {
  std::uint64_t shared_vertices = 0;
  std::uint64_t ambient_edges = 0;   // n * 2^{n-1}
  std::uint64_t crossing_edges = 0;  // ambient edges joining the two classes
};

inline constexpr int kMaxPartitionQubits = 24;

PhasePartition partition_vertices(int n, const GatePlacement& placement);

ClassGraph class_graph(const PhasePartition& partition, PhaseClass which);

/// Removes the bit of `qubit` from an n-bit index, giving an (n-1)-bit index.
BasisIndex drop_bit(BasisIndex x, int n, int qubit);

/// Checks that dropping the target bit maps the class graph isomorphically
/// onto Q_{n-1}.
HypercubeCheck is_hypercube_isomorphic(const ClassGraph& graph);

IntersectionSummary intersection_summary(const PhasePartition& partition);

/// `n=<int> control=<int> target=<int>`, then `phi1: ...` and `phi2: ...`.
void write_partition(std::ostream& os, const PhasePartition& partition);
std::string format_partition(const PhasePartition& partition);
PhasePartition read_partition(std::istream& is);

}  // namespace holotoric
