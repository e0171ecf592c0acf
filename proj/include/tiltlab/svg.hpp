#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltlab/ellipse.hpp"
#include "tiltlab/stability.hpp"
#include "tiltlab/walls.hpp"

namespace tiltlab {

struct PlotWall {
  WallDescriptor wall;
  std::string caption;
};

struct PlotMarker {
  Rational beta;
  Rational alpha_sq;
  std::string caption;
};

struct PlotRequest {
  std::vector<PlotWall> walls;
  std::optional<ExtremalEllipse> ellipse;
  std::optional<StabilityRegion> region;
  std::vector<PlotMarker> markers;
  /// Segments per semicircle or half-ellipse path.
  int samples = 128;
};

/// Renders the upper half-plane with beta horizontal and alpha = sqrt(alpha^2)
/// vertical. Output is byte-identical for identical requests. Throws
/// std::invalid_argument when nothing in the request can be drawn.
std::string render_svg(const PlotRequest& req);

}  // namespace tiltlab
