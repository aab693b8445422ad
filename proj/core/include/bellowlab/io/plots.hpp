#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bellowlab/arm.hpp"
#include "bellowlab/pneumatics.hpp"

namespace bellowlab::io {

struct LabeledSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Simple line chart with axes, ticks and a legend; one polyline per
/// series. Used for pressure-vs-time plots.
void write_line_plot_svg(const std::vector<LabeledSeries>& series,
                         const std::string& x_label,
                         const std::string& y_label, std::ostream& out);

struct LabeledPath {
  std::string label;
  std::vector<Vec2> points;
};

/// Equal-aspect XY chart for wrist paths.
void write_path_plot_svg(const std::vector<LabeledPath>& paths,
                         std::ostream& out);

}  // namespace bellowlab::io
