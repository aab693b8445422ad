#include "bellowlab/actuator.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bellowlab/io/csv.hpp"

namespace bellowlab::actuator {

double cross_section_area(CellShape shape, double cell_length_cm) {
  if (!(cell_length_cm > 0.0))
    throw ValidationError("cross_section_area: cell length must be positive");
  double p = cell_length_cm;
  switch (shape) {
    case CellShape::Square: return p * p;
    case CellShape::Rectangle: return p * (p / 2.0);
    case CellShape::Circle: return kPi * p * p / 4.0;
  }
  throw std::logic_error("cross_section_area: bad enum value");
}

CellDisplacementTable CellDisplacementTable::builtin() {
  CellDisplacementTable t;
  t.insert(CellShape::Square, 3.0, 1.43);
  t.insert(CellShape::Rectangle, 3.0, 0.80);
  t.insert(CellShape::Circle, 3.0, 1.34);
  t.insert(CellShape::Square, 4.0, 2.02);
  t.insert(CellShape::Rectangle, 4.0, 1.23);
  t.insert(CellShape::Circle, 4.0, 1.87);
  return t;
}

CellDisplacementTable CellDisplacementTable::from_csv(std::istream& in) {
  auto rows = io::read_csv(in);
  io::expect_header(rows, {"shape", "p_cm", "delta_cm"},
                    "cell displacement table");
  CellDisplacementTable t;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != 3)
      throw ValidationError("cell displacement table: row " +
                            std::to_string(i) + " has " +
                            std::to_string(row.size()) + " fields, want 3");
    CellShape shape = parse_shape(row[0]);
    double p = io::parse_double(row[1], "p_cm");
    double d = io::parse_double(row[2], "delta_cm");
    if (t.contains(shape, p))
      throw ValidationError("cell displacement table: duplicate entry for " +
                            shape_name(shape) + ", p=" + row[1]);
    if (!(p > 0.0) || !(d > 0.0))
      throw ValidationError("cell displacement table: p_cm and delta_cm "
                            "must be positive at row " + std::to_string(i));
    t.insert(shape, p, d);
  }
  return t;
}

CellDisplacementTable CellDisplacementTable::from_csv_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open displacement table: " + path);
  return from_csv(in);
}

void CellDisplacementTable::insert(CellShape shape, double cell_length_cm,
                                   double delta_cm) {
  data_[{cell_length_cm, static_cast<int>(shape)}] = delta_cm;
}

bool CellDisplacementTable::contains(CellShape shape,
                                     double cell_length_cm) const {
  return data_.count({cell_length_cm, static_cast<int>(shape)}) > 0;
}

double CellDisplacementTable::displacement(CellShape shape,
                                           double cell_length_cm) const {
  auto it = data_.find({cell_length_cm, static_cast<int>(shape)});
  if (it == data_.end()) {
    std::ostringstream os;
    os << "no displacement entry for shape=" << shape_name(shape)
       << " p_cm=" << cell_length_cm;
    throw ValidationError(os.str());
  }
  return it->second;
}

std::vector<CellDisplacementTable::Entry> CellDisplacementTable::entries()
    const {
  std::vector<Entry> out;
  out.reserve(data_.size());
  for (const auto& [key, delta] : data_)
    out.push_back({static_cast<CellShape>(key.second), key.first, delta});
  return out;
}

void CellDisplacementTable::write_csv(std::ostream& out) const {
  out << "shape,p_cm,delta_cm\n";
  for (const auto& e : entries())
    out << shape_name(e.shape) << "," << io::fmt_g17(e.cell_length_cm) << ","
        << io::fmt_g17(e.delta_cm) << "\n";
}

double estimated_elongation(const ActuatorSpec& spec,
                            const CellDisplacementTable& table) {
  validate(spec);
  return spec.n_cells * table.displacement(spec.shape, spec.cell_length_cm);
}

double rest_length(const ActuatorSpec& spec) {
  validate(spec);
  return spec.n_cells * 0.15;
}

double inflated_cell_volume(const ActuatorSpec& spec,
                            const CellDisplacementTable& table,
                            double fill_fraction) {
  validate(spec);
  if (fill_fraction < 0.0 || fill_fraction > 1.0)
    throw ValidationError("fill_fraction must be in [0, 1]");
  double area = cross_section_area(spec.shape, spec.cell_length_cm);
  double delta = table.displacement(spec.shape, spec.cell_length_cm);
  return (2.0 / 3.0) * area *
         (spec.rest_thickness_cm + fill_fraction * delta);
}

double total_inflated_volume(const ActuatorSpec& spec,
                             const CellDisplacementTable& table) {
  return spec.n_cells * inflated_cell_volume(spec, table, 1.0);
}

double estimate_mass(const ActuatorSpec& spec, double areal_density_g_cm2,
                     double seam_margin_cm) {
  validate(spec);
  if (!(areal_density_g_cm2 > 0.0))
    throw ValidationError("areal density must be positive");
  if (seam_margin_cm < 0.0)
    throw ValidationError("seam margin must be non-negative");
  double side = spec.cell_length_cm + 2.0 * seam_margin_cm;
  return 2.0 * spec.n_cells * side * side * areal_density_g_cm2;
}

double elongation_ratio(const ActuatorSpec& spec,
                        const CellDisplacementTable& table) {
  return estimated_elongation(spec, table) / rest_length(spec);
}

}  // namespace bellowlab::actuator
