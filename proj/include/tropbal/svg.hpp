#pragma once

#include "tropbal/newton.hpp"

#include <string>

namespace tropbal {

/// Clipping window in curve coordinates.
struct PlotBox {
  double xmin = -5.0;
  double ymin = -5.0;
  double xmax = 5.0;
  double ymax = 5.0;
};

/// Renders a planar curve as an SVG 1.1 document with exactly one <path> per
/// edge (empty when the edge misses the box). Rays are clipped to the box and
/// drawn with an arrow head; weights above 1 are printed next to their edge.
/// Numbers are written with six decimals so output is byte-stable.
std::string render_svg(const TropicalCurve& curve, const PlotBox& box = {});

}  // namespace tropbal
