#pragma once

#include <string>

#include "geonet/network.hpp"

namespace geonet {

struct RenderStyle {
  int canvas = 512;              // width and height in px, at least 64
  double stroke_per_mult = 1.5;  // chord and ray width per unit of weight
  bool labels = true;

  /// Throws DomainError for canvases below 64 px or nonpositive widths.
  void validate() const;
};

/// SVG drawing of the unit circle, the chords (class "chord", width
/// proportional to weight) and the exterior rays out to 1.3 times the radius
/// (class "ray"). Identical input gives byte-identical output.
std::string render_svg(const Network& net, const RenderStyle& style = {});

}  // namespace geonet
