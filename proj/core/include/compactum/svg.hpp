#pragma once

#include <string>

#include "compactum/slice.hpp"

namespace compactum {

/// Figure conventions: (u, v) in [0, 1]^2 maps to (margin + span * u,
/// margin + span - span * v) on a square canvas.
struct RenderStyle {
  int canvas = 1000;
  int margin = 40;
  int stroke_width = 2;
  std::string line_color = "#000000";
  std::string fill_color = "#999999";  // 60% gray
  int point_radius = 4;
  int marker_radius = 8;
  int digits = 3;  // decimals in path coordinates
};

/// One path per item, in item order. Throws OutOfRange when a coordinate
/// leaves [0, 1]. Equal inputs give byte-identical text.
std::string render_svg(const SliceResult& r, const RenderStyle& style = {});

}  // namespace compactum
