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

#include "holotoric/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace holotoric {

namespace {

const Eigen::Vector2d kIsoAxes[3] = {{1.0, 0.0}, {0.5, -0.5}, {0.0, -1.0}};
const Eigen::Vector2d kIsoCentre{0.75, -0.75};

Eigen::Vector2d isometric(BasisIndex bits, int n, int first_qubit) {
  Eigen::Vector2d p = Eigen::Vector2d::Zero();
  for (int k = 0; k < 3; ++k) {
    if (qubit_bit(bits, n, first_qubit + k)) p += kIsoAxes[k];
  }
  return p;
}

std::string fixed2(double v) {
  // Avoid "-0.00".
  if (std::abs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

bool is_hex_color(const std::string& c) {
  if (c.size() != 7 || c[0] != '#') return false;
  return std::all_of(c.begin() + 1, c.end(),
                     [](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
}

std::string ket_label(BasisIndex x, int n) { return "|" + to_bitstring(x, n) + "⟩"; }

// Maps unit-space points onto the canvas: uniform scale, centred inside the
// margins.
class CanvasMap {
 public:
  CanvasMap(int n, Projection projection) {
    Eigen::Vector2d lo = Eigen::Vector2d::Constant(std::numeric_limits<double>::infinity());
    Eigen::Vector2d hi = -lo;
    for (BasisIndex x = 0; x < (BasisIndex{1} << n); ++x) {
      const auto p = project_vertex(x, n, projection);
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    const double inner = kCanvasSize - 2 * kCanvasMargin;
    const Eigen::Vector2d extent = hi - lo;
    scale_ = inner / std::max(extent.maxCoeff(), 1e-12);
    offset_ = Eigen::Vector2d::Constant(kCanvasMargin) +
              (Eigen::Vector2d::Constant(inner) - scale_ * extent) / 2 - scale_ * lo;
  }

  Eigen::Vector2d operator()(const Eigen::Vector2d& p) const { return offset_ + scale_ * p; }

 private:
  double scale_ = 1.0;
  Eigen::Vector2d offset_;
};

void line(std::ostringstream& os, const char* cls, const Eigen::Vector2d& a,
          const Eigen::Vector2d& b, const char* extra = "") {
  os << "    <line class=\"" << cls << "\" x1=\"" << fixed2(a.x()) << "\" y1=\"" << fixed2(a.y())
     << "\" x2=\"" << fixed2(b.x()) << "\" y2=\"" << fixed2(b.y()) << '"' << extra << "/>\n";
}

}  // namespace

Projection projection_for(int n) {
  switch (n) {
    case 2:
      return Projection::kSquare;
    case 3:
      return Projection::kCubeIsometric;
    case 4:
      return Projection::kTesseractNested;
    default:
      throw InvalidArgument("SVG rendering supports 2..4 qubits, got " + std::to_string(n));
  }
}

std::string_view projection_name(Projection p) {
  switch (p) {
    case Projection::kSquare:
      return "square";
    case Projection::kCubeIsometric:
      return "cube-isometric";
    case Projection::kTesseractNested:
      return "tesseract-nested";
  }
  return "?";
}

Projection parse_projection(std::string_view name) {
  for (auto p : {Projection::kSquare, Projection::kCubeIsometric, Projection::kTesseractNested}) {
    if (projection_name(p) == name) return p;
  }
  throw InvalidArgument("unknown projection: " + std::string(name));
}

Eigen::Vector2d project_vertex(BasisIndex bits, int n, Projection projection) {
  if (projection_for(n) != projection) {
    throw InvalidArgument("projection " + std::string(projection_name(projection)) +
                          " does not fit " + std::to_string(n) + " qubits");
  }
  if (bits >= (BasisIndex{1} << n)) throw InvalidArgument("vertex index out of range");
  switch (projection) {
    case Projection::kSquare:
      return {static_cast<double>(qubit_bit(bits, n, 2)),
              1.0 - static_cast<double>(qubit_bit(bits, n, 1))};
    case Projection::kCubeIsometric:
      return isometric(bits, n, 1);
    case Projection::kTesseractNested: {
      const double s = qubit_bit(bits, n, 1) ? 1.0 : 0.5;
      return kIsoCentre + s * (isometric(bits, n, 2) - kIsoCentre);
    }
  }
  return Eigen::Vector2d::Zero();
}

RenderSpec RenderSpec::defaults(int n, const GatePlacement& placement) {
  return RenderSpec{n, placement, projection_for(n)};
}

void RenderSpec::validate() const {
  if (projection_for(n_qubits) != projection) {
    throw InvalidArgument("projection " + std::string(projection_name(projection)) +
                          " does not fit " + std::to_string(n_qubits) + " qubits");
  }
  placement.check_fits(n_qubits);
  for (const auto* c : {&color_phi1, &color_phi2, &color_ambient}) {
    if (!is_hex_color(*c)) throw InvalidArgument("colors must look like #rrggbb: " + *c);
  }
  for (double w : {ambient_stroke, class_stroke, vertex_radius}) {
    if (!(w > 0) || !std::isfinite(w)) throw InvalidArgument("stroke widths must be positive");
  }
}

std::string render_partition_svg(const PhasePartition& partition, const RenderSpec& spec) {
  spec.validate();
  const int n = partition.n_qubits;
  if (n != spec.n_qubits || !(partition.placement == spec.placement)) {
    throw InvalidArgument("render settings do not describe this partition");
  }
  const CanvasMap canvas(n, spec.projection);
  auto at = [&](BasisIndex x) { return canvas(project_vertex(x, n, spec.projection)); };
  const BasisIndex dim = BasisIndex{1} << n;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n"
     << "  <title>Phase classes of a controlled-phase gate on qubits "
     << spec.placement.control() << "," << spec.placement.target() << " of the " << n
     << "-cube (" << projection_name(spec.projection) << ")</title>\n";

  os << "  <g id=\"ambient\" stroke=\"" << spec.color_ambient << "\" stroke-width=\""
     << fixed2(spec.ambient_stroke) << "\">\n";
  for (BasisIndex x = 0; x < dim; ++x) {
    for (int q = 1; q <= n; ++q) {
      const BasisIndex y = x ^ qubit_mask(n, q);
      if (y > x) line(os, "ambient", at(x), at(y));
    }
  }
  os << "  </g>\n";

  const struct {
    PhaseClass which;
    const char* id;
    const std::string& color;
  } classes[] = {{PhaseClass::kPhi1, "phi1", spec.color_phi1},
                 {PhaseClass::kPhi2, "phi2", spec.color_phi2}};
  for (const auto& c : classes) {
    const auto graph = class_graph(partition, c.which);
    os << "  <g id=\"" << c.id << "\" stroke=\"" << c.color << "\" stroke-width=\""
       << fixed2(spec.class_stroke) << "\">\n";
    const std::string plain = std::string("class-edge ") + c.id;
    const std::string dashed = plain + " diagonal";
    for (const auto& e : graph.edges) {
      if (graph.is_diagonal(e)) {
        line(os, dashed.c_str(), at(e.first), at(e.second), " stroke-dasharray=\"8 6\"");
      } else {
        line(os, plain.c_str(), at(e.first), at(e.second));
      }
    }
    os << "  </g>\n";
  }

  os << "  <g id=\"vertices\" font-family=\"monospace\" font-size=\"" << fixed2(kLabelFontSize)
     << "\">\n";
  std::vector<bool> in_phi1(dim, false);
  for (BasisIndex x : partition.class_phi1) in_phi1[x] = true;
  for (BasisIndex x = 0; x < dim; ++x) {
    const auto p = at(x);
    const char* id = in_phi1[x] ? "phi1" : "phi2";
    const std::string& color = in_phi1[x] ? spec.color_phi1 : spec.color_phi2;
    os << "    <circle class=\"vertex " << id << "\" cx=\"" << fixed2(p.x()) << "\" cy=\""
       << fixed2(p.y()) << "\" r=\"" << fixed2(spec.vertex_radius) << "\" fill=\"" << color
       << "\"/>\n";
    // Labels on the right half hang leftwards so they stay on the canvas.
    const bool right = p.x() > kCanvasSize / 2.0;
    const double dx = spec.vertex_radius + 3;
    os << "    <text x=\"" << fixed2(right ? p.x() - dx : p.x() + dx) << "\" y=\""
       << fixed2(p.y() - dx) << "\"" << (right ? " text-anchor=\"end\"" : "") << ">"
       << ket_label(x, n) << "</text>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string render_partition_dot(const PhasePartition& partition) {
  const int n = partition.n_qubits;
  const BasisIndex dim = BasisIndex{1} << n;
  const std::string phi1_color = "#1f77b4";
  const std::string phi2_color = "#d62728";
  std::vector<bool> in_phi1(dim, false);
  for (BasisIndex x : partition.class_phi1) in_phi1[x] = true;

  std::ostringstream os;
  os << "graph phase_partition {\n"
     << "  label=\"n=" << n << " control=" << partition.placement.control()
     << " target=" << partition.placement.target() << "\";\n"
     << "  node [shape=circle, style=filled, fontcolor=white];\n";
  for (BasisIndex x = 0; x < dim; ++x) {
    os << "  \"" << to_bitstring(x, n) << "\" [class=\"" << (in_phi1[x] ? "phi1" : "phi2")
       << "\", fillcolor=\"" << (in_phi1[x] ? phi1_color : phi2_color) << "\"];\n";
  }
  for (BasisIndex x = 0; x < dim; ++x) {
    for (int q = 1; q <= n; ++q) {
      const BasisIndex y = x ^ qubit_mask(n, q);
      if (y > x) {
        os << "  \"" << to_bitstring(x, n) << "\" -- \"" << to_bitstring(y, n)
           << "\" [color=\"#999999\"];\n";
      }
    }
  }
  for (auto which : {PhaseClass::kPhi1, PhaseClass::kPhi2}) {
    const auto graph = class_graph(partition, which);
    const std::string& color = which == PhaseClass::kPhi1 ? phi1_color : phi2_color;
    for (const auto& e : graph.edges) {
      if (!graph.is_diagonal(e)) continue;
      os << "  \"" << to_bitstring(e.first, n) << "\" -- \"" << to_bitstring(e.second, n)
         << "\" [style=dashed, color=\"" << color << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace holotoric
