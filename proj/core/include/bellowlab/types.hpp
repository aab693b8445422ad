#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace bellowlab {

/// Input or configuration rejected before any work started. CLI maps this
/// to exit code 2; every other exception maps to exit code 1.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

enum class CellShape { Square, Rectangle, Circle };

inline constexpr CellShape kAllShapes[] = {CellShape::Square,
                                           CellShape::Rectangle,
                                           CellShape::Circle};

/// Lowercase name used in every CSV column and CLI flag.
std::string shape_name(CellShape shape);

/// Accepts the lowercase names written by shape_name(); throws
/// ValidationError on anything else.
CellShape parse_shape(const std::string& name);

/// One candidate bellow design: n_cells identical cells of characteristic
/// length cell_length_cm, heat-sealed from two fabric layers.
struct ActuatorSpec {
  CellShape shape = CellShape::Square;
  double cell_length_cm = 3.0;
  int n_cells = 8;
  double rest_thickness_cm = 0.05;
  double seam_width_cm = 0.10;

  friend bool operator==(const ActuatorSpec&, const ActuatorSpec&) = default;
};

/// Throws ValidationError unless cell_length_cm > 0, n_cells >= 1,
/// rest_thickness_cm >= 0 and seam_width_cm >= 0.
void validate(const ActuatorSpec& spec);

/// "square-3-8" style tag used in filenames, plot legends and messages.
std::string variant_label(const ActuatorSpec& spec);

/// Ordering used for every report and CSV: cell length, then cell count,
/// then shape in declaration order.
bool variant_order(const ActuatorSpec& a, const ActuatorSpec& b);

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

}  // namespace bellowlab
