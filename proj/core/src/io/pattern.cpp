#include "bellowlab/io/pattern.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bellowlab/io/svg.hpp"

namespace bellowlab::io {

namespace {

double cell_height(const ActuatorSpec& spec) {
  return spec.shape == CellShape::Rectangle ? spec.cell_length_cm / 2.0
                                            : spec.cell_length_cm;
}

std::vector<Vec2> cell_outline(const ActuatorSpec& spec, double x0,
                               double y0) {
  double p = spec.cell_length_cm;
  double h = cell_height(spec);
  std::vector<Vec2> pts;
  if (spec.shape == CellShape::Circle) {
    Vec2 c{x0 + p / 2.0, y0 + h / 2.0};
    const int steps = 64;
    pts.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
      double a = 2.0 * kPi * i / steps;
      pts.push_back({c.x + 0.5 * p * std::cos(a),
                     c.y + 0.5 * p * std::sin(a)});
    }
  } else {
    pts = {{x0, y0}, {x0 + p, y0}, {x0 + p, y0 + h}, {x0, y0 + h},
           {x0, y0}};
  }
  return pts;
}

}  // namespace

PatternLayout layout_pattern(const ActuatorSpec& spec, double seam_cm,
                             double channel_cm) {
  validate(spec);
  if (!(seam_cm > 0.0))
    throw ValidationError("pattern: seam margin must be positive");
  if (!(channel_cm > 0.0) || channel_cm >= spec.cell_length_cm)
    throw ValidationError("pattern: channel width must be positive and "
                          "narrower than the cell");

  PatternLayout out;
  out.spec = spec;
  out.seam_cm = seam_cm;
  out.channel_cm = channel_cm;
  double p = spec.cell_length_cm;
  double slot = p + 2.0 * seam_cm;
  out.panel_w = spec.n_cells * slot;
  out.panel_h = cell_height(spec) + 2.0 * seam_cm;
  out.panel_origin[0] = {0.0, 0.0};
  out.panel_origin[1] = {0.0, out.panel_h + 1.0};

  double mid_y = out.panel_h / 2.0;
  for (int i = 0; i < spec.n_cells; ++i) {
    double x0 = i * slot + seam_cm;
    out.cell_outlines.push_back(cell_outline(spec, x0, seam_cm));
  }
  for (int i = 1; i < spec.n_cells; ++i) {
    double bx = i * slot;
    out.channel_gaps.push_back(
        {{bx - channel_cm / 2.0, mid_y}, {bx + channel_cm / 2.0, mid_y}});
  }
  double last_x0 = (spec.n_cells - 1) * slot + seam_cm;
  out.port_center = {last_x0 + p / 2.0, mid_y};
  out.port_r = 0.3;
  return out;
}

void write_pattern_svg(const PatternLayout& layout, std::ostream& out) {
  double caption_h = 2.0;
  double total_h = 2.0 * layout.panel_h + 1.0 + caption_h;
  SvgWriter svg(out, -1.0, -1.0, layout.panel_w + 2.0, total_h + 2.0, 1000);

  for (int panel = 0; panel < 2; ++panel) {
    Vec2 o = layout.panel_origin[panel];
    svg.rect(o, layout.panel_w, layout.panel_h,
             "fill:none;stroke:#000;stroke-width:0.06");
    if (panel != 0) continue;
    // Seal outlines, channels and the port only appear on the top panel;
    // the second panel is a plain mirror blank.
    for (const auto& outline : layout.cell_outlines)
      svg.polyline(outline, "stroke:#b00;stroke-width:0.05");
    for (const auto& [a, b] : layout.channel_gaps)
      svg.line(a, b, "stroke:#06c;stroke-width:" +
                         std::to_string(layout.channel_cm));
    svg.circle(layout.port_center, layout.port_r,
               "fill:#06c;stroke:none");
  }

  std::ostringstream caption;
  caption << shape_name(layout.spec.shape) << " p="
          << layout.spec.cell_length_cm << " cm, n=" << layout.spec.n_cells
          << ", panel " << layout.panel_w << " x " << layout.panel_h
          << " cm, seam " << layout.seam_cm << " cm";
  svg.text({0.0, 2.0 * layout.panel_h + 1.0 + 1.2}, caption.str(), 0.6);
  svg.close();
}

void write_pattern_svg_file(const PatternLayout& layout,
                            const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write pattern svg: " + path);
  write_pattern_svg(layout, out);
}

}  // namespace bellowlab::io
