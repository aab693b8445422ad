#include "bellowlab/types.hpp"

#include <sstream>
#include <tuple>

namespace bellowlab {

std::string shape_name(CellShape shape) {
  switch (shape) {
    case CellShape::Square: return "square";
    case CellShape::Rectangle: return "rectangle";
    case CellShape::Circle: return "circle";
  }
  throw std::logic_error("shape_name: bad enum value");
}

CellShape parse_shape(const std::string& name) {
  if (name == "square") return CellShape::Square;
  if (name == "rectangle") return CellShape::Rectangle;
  if (name == "circle") return CellShape::Circle;
  throw ValidationError("unknown cell shape '" + name +
                        "' (expected square, rectangle or circle)");
}

void validate(const ActuatorSpec& spec) {
  if (!(spec.cell_length_cm > 0.0))
    throw ValidationError("cell_length_cm must be positive");
  if (spec.n_cells < 1)
    throw ValidationError("n_cells must be at least 1");
  if (spec.rest_thickness_cm < 0.0)
    throw ValidationError("rest_thickness_cm must be non-negative");
  if (spec.seam_width_cm < 0.0)
    throw ValidationError("seam_width_cm must be non-negative");
}

std::string variant_label(const ActuatorSpec& spec) {
  std::ostringstream os;
  os << shape_name(spec.shape) << "-" << spec.cell_length_cm << "-"
     << spec.n_cells;
  return os.str();
}

bool variant_order(const ActuatorSpec& a, const ActuatorSpec& b) {
  return std::tuple(a.cell_length_cm, a.n_cells, static_cast<int>(a.shape)) <
         std::tuple(b.cell_length_cm, b.n_cells, static_cast<int>(b.shape));
}

}  // namespace bellowlab
