#pragma once

#include "stabwalls/wall_engine.hpp"

#include <string>
#include <vector>

namespace stabwalls {

/// Visible part of the (beta, alpha) upper half-plane.
struct PlotWindow {
  Rational beta_min{-6}, beta_max{-1}, alpha_max{3};
  int width = 800, height = 400;
};

struct Marker {
  Rational beta, alpha_sq;
  std::string label;
};

struct SvgDocument {
  std::string text;
  bool empty_window = false;  // no wall meets the window; axes only
};

/// Throws std::invalid_argument for an invalid window.
void validate_window(const PlotWindow& w);

/// Deterministic SVG: semicircles as arcs centered on the beta-axis, vertical
/// walls as lines, markers as labeled dots. Decimal coordinates (6 digits)
/// appear only here.
SvgDocument render_walls_svg(const std::vector<WallCircle>& walls, const PlotWindow& window,
                             const std::vector<Marker>& markers);

}  // namespace stabwalls
