#include "bellowlab/io/plots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bellowlab/io/svg.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::io {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double span() const { return hi - lo; }
};

std::string tick_label(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void write_line_plot_svg(const std::vector<LabeledSeries>& series,
                         const std::string& x_label,
                         const std::string& y_label, std::ostream& out) {
  if (series.empty()) throw ValidationError("line plot: no series");
  Range xr, yr;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty())
      throw ValidationError("line plot: series '" + s.label +
                            "' is empty or ragged");
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  if (xr.span() <= 0.0) xr.hi = xr.lo + 1.0;
  if (yr.span() <= 0.0) yr.hi = yr.lo + 1.0;

  // Fixed 800x500 canvas with a 70px margin; data mapped linearly.
  const double W = 800, H = 500, M = 70;
  auto mx = [&](double x) { return M + (x - xr.lo) / xr.span() * (W - 2 * M); };
  auto my = [&](double y) {
    return H - M - (y - yr.lo) / yr.span() * (H - 2 * M);
  };

  SvgWriter svg(out, 0, 0, W, H, static_cast<int>(W));
  svg.rect({0, 0}, W, H, "fill:#fff;stroke:none");
  svg.line({M, H - M}, {W - M, H - M}, "stroke:#000;stroke-width:1");
  svg.line({M, M}, {M, H - M}, "stroke:#000;stroke-width:1");
  for (int i = 0; i <= 5; ++i) {
    double fx = xr.lo + xr.span() * i / 5.0;
    double fy = yr.lo + yr.span() * i / 5.0;
    svg.line({mx(fx), H - M}, {mx(fx), H - M + 6},
             "stroke:#000;stroke-width:1");
    svg.text({mx(fx) - 10, H - M + 22}, tick_label(fx), 13);
    svg.line({M - 6, my(fy)}, {M, my(fy)}, "stroke:#000;stroke-width:1");
    svg.text({8, my(fy) + 4}, tick_label(fy), 13);
  }
  svg.text({W / 2 - 30, H - 20}, x_label, 15);
  svg.text({12, M - 30}, y_label, 15);

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    std::vector<Vec2> pts;
    pts.reserve(s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i)
      pts.push_back({mx(s.x[i]), my(s.y[i])});
    std::string color = kPalette[si % std::size(kPalette)];
    svg.polyline(pts, "stroke:" + color + ";stroke-width:1.5");
    svg.line({W - M - 150, M + 18.0 * si + 10},
             {W - M - 120, M + 18.0 * si + 10},
             "stroke:" + color + ";stroke-width:3");
    svg.text({W - M - 112, M + 18.0 * si + 14}, s.label, 13);
  }
  svg.close();
}

void write_path_plot_svg(const std::vector<LabeledPath>& paths,
                         std::ostream& out) {
  if (paths.empty()) throw ValidationError("path plot: no paths");
  Range xr, yr;
  for (const auto& p : paths) {
    if (p.points.empty())
      throw ValidationError("path plot: path '" + p.label + "' is empty");
    for (const auto& v : p.points) {
      xr.add(v.x);
      yr.add(v.y);
    }
  }
  double span = std::max(std::max(xr.span(), yr.span()), 1e-6);
  double pad = 0.08 * span;
  double side = span + 2 * pad;
  double x0 = xr.lo - pad - (side - (xr.span() + 2 * pad)) / 2.0;
  double y_top = yr.hi + pad;

  // Equal aspect; y flipped so +y points up on screen.
  SvgWriter svg(out, 0, 0, side, side, 800);
  auto map = [&](Vec2 v) -> Vec2 { return {v.x - x0, y_top - v.y}; };
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    std::vector<Vec2> pts;
    pts.reserve(paths[pi].points.size());
    for (const auto& v : paths[pi].points) pts.push_back(map(v));
    std::string color = kPalette[pi % std::size(kPalette)];
    svg.polyline(pts, "stroke:" + color + ";stroke-width:" +
                          std::to_string(side / 300.0));
    svg.text({0.02 * side, (0.05 + 0.05 * pi) * side}, paths[pi].label,
             side / 30.0, "fill=\"" + color + "\"");
  }
  svg.close();
}

}  // namespace bellowlab::io
