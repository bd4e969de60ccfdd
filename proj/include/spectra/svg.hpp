#pragma once

#include <string>

#include "spectra/polygon.hpp"

namespace spectra {

// Two overlaid partial-sum polygons with labelled vertices. Vertex labels
// come from the callers (exact rationals for w, decimals for estimates).
struct LabelledPolygon {
  ConvexPolygon<double> polygon;
  std::vector<std::string> vertex_labels;  // size = vertices = segments + 1
  std::string name;
  std::string color;
};

std::string polygon_overlay_svg(const LabelledPolygon& upper,
                                const LabelledPolygon& lower);

}  // namespace spectra
