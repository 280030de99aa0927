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

#include "holotoric/phase_partition.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <istream>
#include <ostream>
#include <sstream>

namespace holotoric {

PhasePartition partition_vertices(int n, const GatePlacement& placement) {
  if (n < 2 || n > kMaxPartitionQubits) {
    throw InvalidArgument("partition needs 2.." + std::to_string(kMaxPartitionQubits) +
                          " qubits");
  }
  placement.check_fits(n);
  PhasePartition p{n, placement, {}, {}};
  const BasisIndex dim = BasisIndex{1} << n;
  p.class_phi1.reserve(dim / 2);
  p.class_phi2.reserve(dim / 2);
  for (BasisIndex x = 0; x < dim; ++x) {
    const bool agree =
        qubit_bit(x, n, placement.control()) == qubit_bit(x, n, placement.target());
    (agree ? p.class_phi1 : p.class_phi2).push_back(x);
  }
  return p;
}

bool ClassGraph::is_diagonal(const std::pair<BasisIndex, BasisIndex>& edge) const {
  const BasisIndex both =
      qubit_mask(n_qubits, placement.control()) | qubit_mask(n_qubits, placement.target());
  return (edge.first ^ edge.second) == both;
}

std::vector<int> ClassGraph::degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  auto slot = [&](BasisIndex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };
  for (const auto& [a, b] : edges) {
    ++deg[slot(a)];
    ++deg[slot(b)];
  }
  return deg;
}

bool ClassGraph::is_connected() const {
  if (vertices.empty()) return true;
  const std::size_t m = vertices.size();
  std::vector<std::vector<std::size_t>> adj(m);
  auto slot = [&](BasisIndex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };
  for (const auto& [a, b] : edges) {
    adj[slot(a)].push_back(slot(b));
    adj[slot(b)].push_back(slot(a));
  }
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == m;
}

ClassGraph class_graph(const PhasePartition& partition, PhaseClass which) {
  const int n = partition.n_qubits;
  const auto& placement = partition.placement;
  ClassGraph g{n, placement,
               which == PhaseClass::kPhi1 ? partition.class_phi1 : partition.class_phi2,
               {}};

  std::vector<BasisIndex> moves;
  for (int q = 1; q <= n; ++q) {
    if (q != placement.control() && q != placement.target()) moves.push_back(qubit_mask(n, q));
  }
  moves.push_back(qubit_mask(n, placement.control()) | qubit_mask(n, placement.target()));

  for (BasisIndex v : g.vertices) {
    for (BasisIndex m : moves) {
      const BasisIndex w = v ^ m;
      if (v < w) g.edges.emplace_back(v, w);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

BasisIndex drop_bit(BasisIndex x, int n, int qubit) {
  const int pos = n - qubit;  // bit position from the right
  const BasisIndex low = x & ((BasisIndex{1} << pos) - 1);
  const BasisIndex high = x >> (pos + 1);
  return (high << pos) | low;
}

HypercubeCheck is_hypercube_isomorphic(const ClassGraph& graph) {
  HypercubeCheck out;
  const int n = graph.n_qubits;
  const int target = graph.placement.target();
  const BasisIndex cube_size = BasisIndex{1} << (n - 1);

  if (graph.vertices.size() != cube_size) {
    out.failure = "vertex count " + std::to_string(graph.vertices.size()) + " != 2^(n-1)";
    return out;
  }
  out.witness.reserve(graph.vertices.size());
  std::vector<bool> hit(cube_size, false);
  for (BasisIndex v : graph.vertices) {
    const BasisIndex image = drop_bit(v, n, target);
    if (hit[image]) {
      out.failure = "witness is not injective at " + to_bitstring(v, n);
      return out;
    }
    hit[image] = true;
    out.witness.push_back(image);
  }

  // Q_{n-1} has (n-1) 2^{n-2} edges; with a bijective vertex map, equal edge
  // counts plus every image edge being a cube edge gives edge-set equality.
  const std::uint64_t cube_edges = static_cast<std::uint64_t>(n - 1) * (cube_size / 2);
  if (graph.edges.size() != cube_edges) {
    out.failure = "edge count " + std::to_string(graph.edges.size()) + " != " +
                  std::to_string(cube_edges);
    return out;
  }
  std::vector<std::pair<BasisIndex, BasisIndex>> images;
  images.reserve(graph.edges.size());
  for (const auto& [a, b] : graph.edges) {
    const BasisIndex ia = drop_bit(a, n, target);
    const BasisIndex ib = drop_bit(b, n, target);
    const BasisIndex diff = ia ^ ib;
    if (diff == 0 || (diff & (diff - 1)) != 0) {
      out.failure = "edge " + to_bitstring(a, n) + "-" + to_bitstring(b, n) +
                    " does not map to a hypercube edge";
      return out;
    }
    images.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    out.failure = "two edges map to the same hypercube edge";
    return out;
  }
  out.isomorphic = true;
  return out;
}

IntersectionSummary intersection_summary(const PhasePartition& partition) {
  const int n = partition.n_qubits;
  IntersectionSummary s;
  std::vector<BasisIndex> shared;
  std::set_intersection(partition.class_phi1.begin(), partition.class_phi1.end(),
                        partition.class_phi2.begin(), partition.class_phi2.end(),
                        std::back_inserter(shared));
  s.shared_vertices = shared.size();

  const BasisIndex dim = BasisIndex{1} << n;
  std::vector<bool> in_phi1(dim, false);
  for (BasisIndex x : partition.class_phi1) in_phi1[x] = true;
  for (BasisIndex x = 0; x < dim; ++x) {
    for (int q = 1; q <= n; ++q) {
      const BasisIndex y = x ^ qubit_mask(n, q);
      if (y < x) continue;
      ++s.ambient_edges;
      if (in_phi1[x] != in_phi1[y]) ++s.crossing_edges;
    }
  }
  return s;
}

void write_partition(std::ostream& os, const PhasePartition& p) {
  os << "n=" << p.n_qubits << " control=" << p.placement.control()
     << " target=" << p.placement.target() << '\n';
  os << "phi1:";
  for (BasisIndex x : p.class_phi1) os << ' ' << to_bitstring(x, p.n_qubits);
  os << "\nphi2:";
  for (BasisIndex x : p.class_phi2) os << ' ' << to_bitstring(x, p.n_qubits);
  os << '\n';
}

std::string format_partition(const PhasePartition& p) {
  std::ostringstream os;
  write_partition(os, p);
  return os.str();
}

PhasePartition read_partition(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty partition");
  int n = 0;
  int control = 0;
  int target = 0;
  char tail = 0;
  if (std::sscanf(line.c_str(), "n=%d control=%d target=%d %c", &n, &control, &target, &tail) !=
      3) {
    throw ParseError("bad partition header: " + line);
  }
  PhasePartition p{n, GatePlacement(control, target), {}, {}};
  auto read_class = [&](const char* tag, std::vector<BasisIndex>& out) {
    if (!std::getline(is, line)) throw ParseError(std::string("missing ") + tag + " line");
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head != tag) throw ParseError(std::string("expected ") + tag + ", got " + head);
    std::string bits;
    while (ls >> bits) {
      if (bits.size() != static_cast<std::size_t>(n)) throw ParseError("bit string length != n");
      out.push_back(parse_bitstring(bits));
    }
  };
  read_class("phi1:", p.class_phi1);
  read_class("phi2:", p.class_phi2);
  // Only partitions that match the rule for their header are accepted.
  const auto expected = partition_vertices(n, p.placement);
  if (expected.class_phi1 != p.class_phi1 || expected.class_phi2 != p.class_phi2) {
    throw ParseError("partition classes do not match the header placement");
  }
  return p;
}

}  // namespace holotoric
