#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bellowlab/types.hpp"

namespace bellowlab::io {

/// Streams a standalone SVG document. Coordinates are whatever the caller
/// sets up via the viewBox; no transforms are applied here.
class SvgWriter {
public:
  SvgWriter(std::ostream& out, double min_x, double min_y, double width,
            double height, int pixel_width = 800);
  ~SvgWriter();

  void line(Vec2 a, Vec2 b, const std::string& style);
  void polyline(const std::vector<Vec2>& pts, const std::string& style);
  void rect(Vec2 origin, double w, double h, const std::string& style);
  void circle(Vec2 center, double r, const std::string& style);
  void text(Vec2 pos, const std::string& s, double font_size,
            const std::string& extra = "");
  void raw(const std::string& fragment);
  void close();

private:
  std::ostream& out_;
  bool closed_ = false;
};

std::string xml_escape(const std::string& s);

}  // namespace bellowlab::io
