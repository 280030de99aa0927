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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "holotoric/errors.hpp"

namespace holotoric {

/// Point of the integer lattice Z^d.
using LatticeVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

LatticeVector lattice_vector(std::initializer_list<std::int64_t> coords);

/// Divides out the gcd of the coordinates; direction (and sign) is kept.
/// The zero vector maps to itself.
LatticeVector primitive(const LatticeVector& v);

/// Rank of the vectors over Q, computed exactly.
int lattice_rank(std::span<const LatticeVector> vectors);

/// Lexicographic order on coordinates, used to canonicalize generator sets.
bool lattice_less(const LatticeVector& a, const LatticeVector& b);

/// Convex polyhedral cone { sum l_v v : l_v >= 0 } generated by a finite set
/// of lattice vectors. Zero generators are dropped and exact duplicates
/// removed, keeping first-occurrence order. No generators means the zero cone.
class Cone {
 public:
  Cone(int dimension, std::vector<LatticeVector> generators);

  /// The orthant generated by signs[k] * e_k.
  static Cone orthant(std::span<const int> signs);

  int dimension() const { return dimension_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

 private:
  int dimension_;
  std::vector<LatticeVector> generators_;
};

/// Conv(S) for a finite vertex set; vertices deduplicated.
class Polytope {
 public:
  Polytope(int dimension, std::vector<LatticeVector> vertices);

  int dimension() const { return dimension_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }

 private:
  int dimension_;
  std::vector<LatticeVector> vertices_;
};

/// Exponent vectors beta with nonzero coefficient in a Laurent polynomial.
class LaurentSupport {
 public:
  LaurentSupport(int dimension, std::vector<LatticeVector> exponents);

  int dimension() const { return dimension_; }
  const std::vector<LatticeVector>& exponents() const { return exponents_; }

 private:
  int dimension_;
  std::vector<LatticeVector> exponents_;
};

/// Affine chart of (CP^1)^n: slot k uses z_k (+1) or z_k^{-1} (-1).
class Chart {
 public:
  explicit Chart(std::vector<int> signs);

  int size() const { return static_cast<int>(signs_.size()); }
  const std::vector<int>& signs() const { return signs_; }

  /// "(z1^-1, z2, z3)"
  std::string coordinates() const;

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<int> signs_;
};

/// Slots (1-based) on which two charts use the same coordinate. These index
/// the shared face of the corresponding orthant cones.
std::vector<int> chart_overlap(const Chart& a, const Chart& b);

/// Complete fan of (CP^1)^n. Rays are ordered +e1, -e1, +e2, -e2, ...;
/// maximal cone k lists ray indices (0-based) and matches chart k of
/// product_p1_charts(n).
struct Fan {
  int dimension = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> maximal_cones;

  Cone cone(std::size_t k) const;
};

/// Exact membership test by solving point = sum l_v v over Q.
/// Throws NonSimplicialCone if the generators are dependent.
bool cone_contains(const Cone& cone, const LatticeVector& point);

bool is_simplicial(const Cone& cone);

/// sigma cap -sigma == {0}, decided exactly. For simplicial cones this is
/// always true; dependent generator sets are checked by asking whether 0 lies
/// in the convex hull of the generators.
bool is_strongly_convex(const Cone& cone);

/// Dual of a full-dimensional simplicial cone: rows of the inverse generator
/// matrix, scaled to primitive integer vectors. Generator k pairs positively
/// with generator k of the input and to zero with the others.
Cone dual_cone(const Cone& cone);

/// True when both cones have the same set of primitive generators.
bool same_generator_set(const Cone& a, const Cone& b);

/// Membership of the Laurent polynomial in the monomial algebra R_sigma.
bool support_in_cone(const LaurentSupport& support, const Cone& cone);

inline constexpr int kMaxToricDimension = 16;

/// All 2^n charts: no inversions first, then single inversions by slot, then
/// pairs of slots in lexicographic order, and so on.
std::vector<Chart> product_p1_charts(int n);

Fan product_p1_fan(int n);

/// The unit n-cube, vertices {0,1}^n in binary order with slot 1 most
/// significant.
Polytope moment_polytope(int n);

// Text format: `dim=<n>`, then `chart`, `ray`, `cone` and `vertex` lines.

void write_charts(std::ostream& os, std::span<const Chart> charts);
void write_fan(std::ostream& os, const Fan& fan);
void write_polytope(std::ostream& os, const Polytope& polytope);

/// Everything `fan --n N` prints, in one block with a single dim= header.
void write_toric_summary(std::ostream& os, int n);

struct ToricDocument {
  int dimension = 0;
  std::vector<Chart> charts;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> cones;
  std::vector<LatticeVector> vertices;
};

/// Reads any mix of the line kinds above. Later `dim=` lines must agree with
/// the first one.
ToricDocument read_toric(std::istream& is);

}  // namespace holotoric
