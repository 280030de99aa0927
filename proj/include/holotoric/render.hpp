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

#include <string>
#include <string_view>

#include <Eigen/Core>

#include "holotoric/bits.hpp"
#include "holotoric/phase_partition.hpp"

namespace holotoric {

enum class Projection { kSquare, kCubeIsometric, kTesseractNested };

Projection projection_for(int n);
std::string_view projection_name(Projection p);
Projection parse_projection(std::string_view name);

/// Position of a cube vertex before canvas scaling. SVG orientation: y grows
/// downwards.
///  - square:           (bit2, 1 - bit1)
///  - cube-isometric:   bit1 (1,0) + bit2 (0.5,-0.5) + bit3 (0,-1)
///  - tesseract-nested: isometric cube of bits 2..4, scaled by 0.5 (bit1 = 0)
///                      or 1.0 (bit1 = 1) about the cube centre (0.75,-0.75)
Eigen::Vector2d project_vertex(BasisIndex bits, int n, Projection projection);

inline constexpr double kCanvasSize = 800.0;
inline constexpr double kCanvasMargin = 40.0;
inline constexpr double kLabelFontSize = 14.0;

struct RenderSpec {
  int n_qubits;
  GatePlacement placement;
  Projection projection;
  std::string color_phi1 = "#1f77b4";
  std::string color_phi2 = "#d62728";
  std::string color_ambient = "#999999";
  double ambient_stroke = 1.5;
  double class_stroke = 3.0;
  double vertex_radius = 9.0;

  /// Default settings for an SVG of an n-cube, 2 <= n <= 4.
  static RenderSpec defaults(int n, const GatePlacement& placement);

  /// Throws InvalidArgument on a projection/n mismatch, bad colors or
  /// non-positive widths.
  void validate() const;
};

/// SVG drawing of the n-cube skeleton with both phase classes: ambient edges
/// in gray, class edges in the class color (diagonal moves dashed), vertices
/// as labelled circles. Byte-deterministic.
std::string render_partition_svg(const PhasePartition& partition, const RenderSpec& spec);

/// Graphviz export for any n: every vertex, all ambient edges, and the
/// dashed diagonal edges of both classes.
std::string render_partition_dot(const PhasePartition& partition);

}  // namespace holotoric
