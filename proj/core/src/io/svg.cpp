#include "bellowlab/io/svg.hpp"

#include "bellowlab/io/csv.hpp"

namespace bellowlab::io {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

SvgWriter::SvgWriter(std::ostream& out, double min_x, double min_y,
                     double width, double height, int pixel_width)
    : out_(out) {
  int pixel_height = static_cast<int>(pixel_width * height / width + 0.5);
  out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixel_width
       << "\" height=\"" << pixel_height << "\" viewBox=\""
       << fmt_g17(min_x) << " " << fmt_g17(min_y) << " " << fmt_g17(width)
       << " " << fmt_g17(height) << "\">\n";
}

SvgWriter::~SvgWriter() {
  if (!closed_) close();
}

void SvgWriter::close() {
  if (closed_) return;
  out_ << "</svg>\n";
  closed_ = true;
}

void SvgWriter::line(Vec2 a, Vec2 b, const std::string& style) {
  out_ << "<line x1=\"" << fmt_g17(a.x) << "\" y1=\"" << fmt_g17(a.y)
       << "\" x2=\"" << fmt_g17(b.x) << "\" y2=\"" << fmt_g17(b.y)
       << "\" style=\"" << xml_escape(style) << "\"/>\n";
}

void SvgWriter::polyline(const std::vector<Vec2>& pts,
                         const std::string& style) {
  out_ << "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out_ << " ";
    out_ << fmt_g17(pts[i].x) << "," << fmt_g17(pts[i].y);
  }
  out_ << "\" style=\"fill:none;" << xml_escape(style) << "\"/>\n";
}

void SvgWriter::rect(Vec2 origin, double w, double h,
                     const std::string& style) {
  out_ << "<rect x=\"" << fmt_g17(origin.x) << "\" y=\"" << fmt_g17(origin.y)
       << "\" width=\"" << fmt_g17(w) << "\" height=\"" << fmt_g17(h)
       << "\" style=\"" << xml_escape(style) << "\"/>\n";
}

void SvgWriter::circle(Vec2 center, double r, const std::string& style) {
  out_ << "<circle cx=\"" << fmt_g17(center.x) << "\" cy=\""
       << fmt_g17(center.y) << "\" r=\"" << fmt_g17(r) << "\" style=\""
       << xml_escape(style) << "\"/>\n";
}

void SvgWriter::text(Vec2 pos, const std::string& s, double font_size,
                     const std::string& extra) {
  out_ << "<text x=\"" << fmt_g17(pos.x) << "\" y=\"" << fmt_g17(pos.y)
       << "\" font-size=\"" << fmt_g17(font_size) << "\"";
  if (!extra.empty()) out_ << " " << extra;
  out_ << ">" << xml_escape(s) << "</text>\n";
}

void SvgWriter::raw(const std::string& fragment) { out_ << fragment; }

}  // namespace bellowlab::io
