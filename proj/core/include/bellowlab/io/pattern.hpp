#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bellowlab/actuator.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::io {

/// Cut-and-seal drawing for one bellow: two identical fabric panels, the
/// cell seal outlines, the inter-cell channel gaps and the inflation port.
/// All dimensions in cm.
struct PatternLayout {
  ActuatorSpec spec;
  double panel_w = 0.0;   // n * (p + 2 * seam)
  double panel_h = 0.0;   // cell height + 2 * seam
  double seam_cm = 0.0;
  double channel_cm = 0.0;
  /// Top-left corners of the two panels in drawing coordinates.
  Vec2 panel_origin[2];
  /// Per cell: outline of the seal path around the pouch, one closed
  /// polygon (polyline for circles) per cell, in panel-0 coordinates.
  std::vector<std::vector<Vec2>> cell_outlines;
  /// Channel gap segments left open in the shared seal line.
  std::vector<std::pair<Vec2, Vec2>> channel_gaps;
  Vec2 port_center;
  double port_r = 0.0;
};

/// seam defaults to the mass-model seam margin; channel gaps are 0.5 cm,
/// centered on the shared cell boundary; the port sits on the last cell.
PatternLayout layout_pattern(const ActuatorSpec& spec,
                             double seam_cm = actuator::kDefaultSeamMargin,
                             double channel_cm = 0.5);

/// Renders the layout as SVG: both panels, seal outlines, channel gaps,
/// port, and a dimension caption. The drawing is annotated in cm via the
/// viewBox; 1 user unit = 1 cm.
void write_pattern_svg(const PatternLayout& layout, std::ostream& out);
void write_pattern_svg_file(const PatternLayout& layout,
                            const std::string& path);

}  // namespace bellowlab::io
