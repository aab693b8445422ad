#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bellowlab/types.hpp"

namespace bellowlab::actuator {

/// Fabric areal density of the 200D TPU-coated nylon we cut patterns from,
/// in g/cm^2 (two layers are counted explicitly by estimate_mass).
inline constexpr double kDefaultArealDensity = 0.03;

/// Extra margin left around each cell for the heat seal, in cm per side.
inline constexpr double kDefaultSeamMargin = 0.5;

/// Pouch cross-section area in cm^2 for a cell of characteristic length
/// p: p^2 (square), p * p/2 (rectangle), pi p^2 / 4 (circle).
double cross_section_area(CellShape shape, double cell_length_cm);

/// Empirical per-cell axial displacement at full inflation, in cm, keyed
/// by (shape, cell length). Values come from bench characterization of
/// sealed prototypes; per cell they are constant across cell counts.
class CellDisplacementTable {
public:
  /// The six calibrated entries for 3 cm and 4 cm cells of all shapes.
  static CellDisplacementTable builtin();

  /// Reads the CSV schema written by write_csv: header
  /// "shape,p_cm,delta_cm", one row per entry. Throws ValidationError on
  /// malformed rows or duplicate keys.
  static CellDisplacementTable from_csv(std::istream& in);
  static CellDisplacementTable from_csv_file(const std::string& path);

  void insert(CellShape shape, double cell_length_cm, double delta_cm);
  bool contains(CellShape shape, double cell_length_cm) const;

  /// Per-cell displacement in cm; throws ValidationError naming the
  /// missing key if the table has no entry.
  double displacement(CellShape shape, double cell_length_cm) const;

  struct Entry {
    CellShape shape;
    double cell_length_cm;
    double delta_cm;
  };
  /// Entries sorted by (cell length, shape).
  std::vector<Entry> entries() const;

  void write_csv(std::ostream& out) const;

private:
  std::map<std::pair<double, int>, double> data_;
};

/// n * per-cell displacement, in cm. The model is deliberately linear in
/// cell count; bench data backs that up at these scales.
double estimated_elongation(const ActuatorSpec& spec,
                            const CellDisplacementTable& table);

/// Fully deflated length: each sealed cell collapses to ~0.15 cm of
/// stacked fabric and seam.
double rest_length(const ActuatorSpec& spec);

/// Volume of one cell at the given fill fraction in [0, 1], using a lens
/// approximation: (2/3) * A * (t_rest + fill * delta).
double inflated_cell_volume(const ActuatorSpec& spec,
                            const CellDisplacementTable& table,
                            double fill_fraction);

/// All n cells at full fill.
double total_inflated_volume(const ActuatorSpec& spec,
                             const CellDisplacementTable& table);

/// Two fabric layers of (p + 2 * seam_margin)^2 per cell, in grams.
double estimate_mass(const ActuatorSpec& spec,
                     double areal_density_g_cm2 = kDefaultArealDensity,
                     double seam_margin_cm = kDefaultSeamMargin);

/// estimated_elongation / rest_length; dimensionless.
double elongation_ratio(const ActuatorSpec& spec,
                        const CellDisplacementTable& table);

}  // namespace bellowlab::actuator
