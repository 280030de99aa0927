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

#include "holotoric/toric.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "exact_linalg.hpp"

namespace holotoric {

namespace {

using exact::BigInt;

void check_dimension(int d) {
  if (d < 1) throw InvalidArgument("lattice dimension must be at least 1");
}

void check_vector(const LatticeVector& v, int d, const char* what) {
  if (v.size() != d) {
    throw InvalidArgument(std::string(what) + " has dimension " + std::to_string(v.size()) +
                          ", expected " + std::to_string(d));
  }
}

bool lattice_equal(const LatticeVector& a, const LatticeVector& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

std::vector<LatticeVector> dedup_in_order(std::vector<LatticeVector> in, bool drop_zero) {
  std::vector<LatticeVector> out;
  out.reserve(in.size());
  for (auto& v : in) {
    if (drop_zero && v.isZero()) continue;
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const LatticeVector& w) { return lattice_equal(v, w); });
    if (!dup) out.push_back(std::move(v));
  }
  return out;
}

// Generators as the columns of a d x k matrix.
exact::Matrix column_matrix(std::span<const LatticeVector> columns, int d) {
  exact::Matrix m(static_cast<std::size_t>(d), std::vector<BigInt>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r)][k] = columns[k](r);
  return m;
}

std::vector<BigInt> big_vector(const LatticeVector& v) {
  std::vector<BigInt> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i);
  return out;
}

void require_simplicial(const Cone& cone, const char* op) {
  if (!is_simplicial(cone)) {
    throw NonSimplicialCone(std::string(op) + ": generators are linearly dependent");
  }
}

void check_size(int n) {
  if (n < 1 || n > kMaxToricDimension) {
    throw InvalidArgument("n must be in 1.." + std::to_string(kMaxToricDimension));
  }
}

// 0 in Conv(points)? By Caratheodory it suffices to look at affinely
// independent subsets of at most d+1 points.
bool origin_in_hull(const std::vector<LatticeVector>& points, int d) {
  const std::size_t m = points.size();
  if (m > 24) throw InvalidArgument("too many generators for the exact convexity test");
  const std::size_t max_size = std::min<std::size_t>(m, static_cast<std::size_t>(d) + 1);
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      // Columns (v, 1); solve for barycentric weights of the origin.
      exact::Matrix a(static_cast<std::size_t>(d) + 1);
      for (std::size_t i = 0; i < m; ++i) {
        if (!pick[i]) continue;
        for (int r = 0; r < d; ++r) a[static_cast<std::size_t>(r)].push_back(points[i](r));
        a[static_cast<std::size_t>(d)].push_back(1);
      }
      if (exact::rank(a) != size) continue;
      std::vector<BigInt> rhs(static_cast<std::size_t>(d) + 1, 0);
      rhs.back() = 1;
      const auto sol = exact::solve_full_column_rank(a, rhs);
      if (!sol) continue;
      const bool nonneg = std::all_of(sol->numerators.begin(), sol->numerators.end(),
                                      [&](const BigInt& x) { return x * sol->denominator >= 0; });
      if (nonneg) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

}  // namespace

LatticeVector lattice_vector(std::initializer_list<std::int64_t> coords) {
  LatticeVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (auto c : coords) v(i++) = c;
  return v;
}

LatticeVector primitive(const LatticeVector& v) {
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  if (g == 0) return v;
  return v / g;
}

int lattice_rank(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  const int d = static_cast<int>(vectors.front().size());
  for (const auto& v : vectors) check_vector(v, d, "vector");
  return static_cast<int>(exact::rank(column_matrix(vectors, d)));
}

bool lattice_less(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

Cone::Cone(int dimension, std::vector<LatticeVector> generators) : dimension_(dimension) {
  check_dimension(dimension);
  for (const auto& g : generators) check_vector(g, dimension, "generator");
  generators_ = dedup_in_order(std::move(generators), true);
}

Cone Cone::orthant(std::span<const int> signs) {
  const int d = static_cast<int>(signs.size());
  std::vector<LatticeVector> gens;
  for (int k = 0; k < d; ++k) {
    const int s = signs[static_cast<std::size_t>(k)];
    if (s != 1 && s != -1) throw InvalidArgument("orthant signs must be +1 or -1");
    LatticeVector e = LatticeVector::Zero(d);
    e(k) = s;
    gens.push_back(std::move(e));
  }
  return Cone(d, std::move(gens));
}

Polytope::Polytope(int dimension, std::vector<LatticeVector> vertices) : dimension_(dimension) {
  check_dimension(dimension);
  if (vertices.empty()) throw InvalidArgument("polytope needs at least one vertex");
  for (const auto& v : vertices) check_vector(v, dimension, "vertex");
  vertices_ = dedup_in_order(std::move(vertices), false);
}

LaurentSupport::LaurentSupport(int dimension, std::vector<LatticeVector> exponents)
    : dimension_(dimension) {
  check_dimension(dimension);
  for (const auto& e : exponents) check_vector(e, dimension, "exponent");
  exponents_ = dedup_in_order(std::move(exponents), false);
}

Chart::Chart(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw InvalidArgument("chart needs at least one slot");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InvalidArgument("chart signs must be +1 or -1");
  }
}

std::string Chart::coordinates() const {
  std::string out = "(";
  for (std::size_t k = 0; k < signs_.size(); ++k) {
    if (k) out += ", ";
    out += "z" + std::to_string(k + 1);
    if (signs_[k] < 0) out += "^-1";
  }
  return out + ")";
}

std::vector<int> chart_overlap(const Chart& a, const Chart& b) {
  if (a.size() != b.size()) throw InvalidArgument("charts of different sizes");
  std::vector<int> slots;
  for (int k = 0; k < a.size(); ++k) {
    if (a.signs()[static_cast<std::size_t>(k)] == b.signs()[static_cast<std::size_t>(k)])
      slots.push_back(k + 1);
  }
  return slots;
}

Cone Fan::cone(std::size_t k) const {
  std::vector<LatticeVector> gens;
  for (int r : maximal_cones.at(k)) gens.push_back(rays.at(static_cast<std::size_t>(r)));
  return Cone(dimension, std::move(gens));
}

bool is_simplicial(const Cone& cone) {
  const auto& g = cone.generators();
  if (g.empty()) return true;
  return exact::rank(column_matrix(g, cone.dimension())) == g.size();
}

bool cone_contains(const Cone& cone, const LatticeVector& point) {
  check_vector(point, cone.dimension(), "point");
  require_simplicial(cone, "cone_contains");
  const auto& g = cone.generators();
  if (g.empty()) return point.isZero();
  const auto sol = exact::solve_full_column_rank(column_matrix(g, cone.dimension()),
                                                 big_vector(point));
  if (!sol) return false;
  return std::all_of(sol->numerators.begin(), sol->numerators.end(),
                     [&](const BigInt& x) { return x * sol->denominator >= 0; });
}

bool is_strongly_convex(const Cone& cone) {
  if (is_simplicial(cone)) return true;
  return !origin_in_hull(cone.generators(), cone.dimension());
}

Cone dual_cone(const Cone& cone) {
  require_simplicial(cone, "dual_cone");
  const int d = cone.dimension();
  const auto& g = cone.generators();
  if (static_cast<int>(g.size()) != d) {
    throw NotFullDimensional("dual_cone needs " + std::to_string(d) + " generators, got " +
                             std::to_string(g.size()));
  }
  const auto m = column_matrix(g, d);
  const BigInt det = exact::determinant(m);
  const auto adj = exact::adjugate(m);
  std::vector<LatticeVector> dual;
  for (int k = 0; k < d; ++k) {
    // Row k of adj(G) = det * (G^{-1})_k; flip by sign(det) to keep <u_k, v_k> > 0.
    std::vector<BigInt> row = adj[static_cast<std::size_t>(k)];
    if (det < 0)
      for (auto& x : row) x = -x;
    BigInt g_all = 0;
    for (const auto& x : row) g_all = boost::multiprecision::gcd(g_all, x);
    LatticeVector u(d);
    for (int j = 0; j < d; ++j) {
      const BigInt q = row[static_cast<std::size_t>(j)] / g_all;
      u(j) = q.convert_to<std::int64_t>();
    }
    dual.push_back(std::move(u));
  }
  return Cone(d, std::move(dual));
}

bool same_generator_set(const Cone& a, const Cone& b) {
  if (a.dimension() != b.dimension()) return false;
  auto canon = [](const Cone& c) {
    std::vector<LatticeVector> v;
    for (const auto& g : c.generators()) v.push_back(primitive(g));
    std::sort(v.begin(), v.end(), lattice_less);
    v.erase(std::unique(v.begin(), v.end(), lattice_equal), v.end());
    return v;
  };
  const auto ca = canon(a);
  const auto cb = canon(b);
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end(), lattice_equal);
}

bool support_in_cone(const LaurentSupport& support, const Cone& cone) {
  if (support.dimension() != cone.dimension()) {
    throw InvalidArgument("support and cone dimensions differ");
  }
  require_simplicial(cone, "support_in_cone");
  return std::all_of(support.exponents().begin(), support.exponents().end(),
                     [&](const LatticeVector& e) { return cone_contains(cone, e); });
}

std::vector<Chart> product_p1_charts(int n) {
  check_size(n);
  std::vector<Chart> charts;
  charts.reserve(std::size_t{1} << n);
  for (int inversions = 0; inversions <= n; ++inversions) {
    // Lexicographic k-subsets of slots via a descending bitmask permutation.
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + inversions, true);
    do {
      std::vector<int> signs(static_cast<std::size_t>(n), 1);
      for (int k = 0; k < n; ++k)
        if (pick[static_cast<std::size_t>(k)]) signs[static_cast<std::size_t>(k)] = -1;
      charts.emplace_back(std::move(signs));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return charts;
}

Fan product_p1_fan(int n) {
  check_size(n);
  Fan fan;
  fan.dimension = n;
  for (int k = 0; k < n; ++k) {
    for (int s : {1, -1}) {
      LatticeVector e = LatticeVector::Zero(n);
      e(k) = s;
      fan.rays.push_back(std::move(e));
    }
  }
  for (const auto& chart : product_p1_charts(n)) {
    std::vector<int> cone;
    for (int k = 0; k < n; ++k) cone.push_back(2 * k + (chart.signs()[static_cast<std::size_t>(k)] < 0));
    fan.maximal_cones.push_back(std::move(cone));
  }
  return fan;
}

Polytope moment_polytope(int n) {
  check_size(n);
  std::vector<LatticeVector> vertices;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    LatticeVector v(n);
    for (int k = 0; k < n; ++k) v(k) = static_cast<std::int64_t>((x >> (n - 1 - k)) & 1U);
    vertices.push_back(std::move(v));
  }
  return Polytope(n, std::move(vertices));
}

namespace {

void write_ints(std::ostream& os, const char* tag, const LatticeVector& v) {
  os << tag;
  for (Eigen::Index i = 0; i < v.size(); ++i) os << ' ' << v(i);
  os << '\n';
}

void write_chart_lines(std::ostream& os, std::span<const Chart> charts) {
  for (const auto& c : charts) {
    os << "chart";
    for (int s : c.signs()) os << ' ' << s;
    os << '\n';
  }
}

void write_fan_lines(std::ostream& os, const Fan& fan) {
  for (const auto& r : fan.rays) write_ints(os, "ray", r);
  for (const auto& c : fan.maximal_cones) {
    os << "cone";
    for (int i : c) os << ' ' << i;
    os << '\n';
  }
}

void write_vertex_lines(std::ostream& os, const Polytope& p) {
  for (const auto& v : p.vertices()) write_ints(os, "vertex", v);
}

}  // namespace

void write_charts(std::ostream& os, std::span<const Chart> charts) {
  if (charts.empty()) throw InvalidArgument("no charts to write");
  os << "dim=" << charts.front().size() << '\n';
  write_chart_lines(os, charts);
}

void write_fan(std::ostream& os, const Fan& fan) {
  os << "dim=" << fan.dimension << '\n';
  write_fan_lines(os, fan);
}

void write_polytope(std::ostream& os, const Polytope& polytope) {
  os << "dim=" << polytope.dimension() << '\n';
  write_vertex_lines(os, polytope);
}

void write_toric_summary(std::ostream& os, int n) {
  const auto charts = product_p1_charts(n);
  os << "dim=" << n << '\n';
  write_chart_lines(os, charts);
  write_fan_lines(os, product_p1_fan(n));
  write_vertex_lines(os, moment_polytope(n));
}

ToricDocument read_toric(std::istream& is) {
  ToricDocument doc;
  std::string line;
  auto ints = [&](std::istringstream& ls) {
    std::vector<std::int64_t> v;
    std::int64_t x = 0;
    while (ls >> x) v.push_back(x);
    if (!ls.eof()) throw ParseError("non-integer token in: " + line);
    return v;
  };
  auto as_vector = [&](const std::vector<std::int64_t>& v) {
    if (doc.dimension == 0) throw ParseError("dim= must precede data lines");
    if (static_cast<int>(v.size()) != doc.dimension) throw ParseError("wrong arity: " + line);
    LatticeVector out(doc.dimension);
    for (int i = 0; i < doc.dimension; ++i) out(i) = v[static_cast<std::size_t>(i)];
    return out;
  };
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("dim=", 0) == 0) {
      int d = 0;
      try {
        d = std::stoi(line.substr(4));
      } catch (const std::logic_error&) {
        throw ParseError("bad dim line: " + line);
      }
      if (d < 1) throw ParseError("dimension must be positive");
      if (doc.dimension != 0 && d != doc.dimension) throw ParseError("conflicting dim= lines");
      doc.dimension = d;
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    const auto v = ints(ls);
    if (tag == "ray") {
      doc.rays.push_back(as_vector(v));
    } else if (tag == "vertex") {
      doc.vertices.push_back(as_vector(v));
    } else if (tag == "chart") {
      if (doc.dimension == 0 || static_cast<int>(v.size()) != doc.dimension)
        throw ParseError("wrong chart arity: " + line);
      try {
        doc.charts.emplace_back(std::vector<int>(v.begin(), v.end()));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    } else if (tag == "cone") {
      std::vector<int> idx;
      for (auto x : v) {
        if (x < 0) throw ParseError("negative ray index: " + line);
        idx.push_back(static_cast<int>(x));
      }
      doc.cones.push_back(std::move(idx));
    } else {
      throw ParseError("unknown line kind: " + tag);
    }
  }
  for (const auto& c : doc.cones)
    for (int i : c)
      if (static_cast<std::size_t>(i) >= doc.rays.size())
        throw ParseError("cone references missing ray " + std::to_string(i));
  return doc;
}

}  // namespace holotoric
