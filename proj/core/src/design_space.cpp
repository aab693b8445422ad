#include "bellowlab/design_space.hpp"

#include <ostream>

#include "bellowlab/io/csv.hpp"

namespace bellowlab::design_space {

std::vector<ActuatorSpec> enumerate_candidates() {
  static constexpr double kLengths[] = {1.0, 2.0, 3.0, 4.0};
  static constexpr int kCounts[] = {1, 6, 8, 10, 12, 14};
  std::vector<ActuatorSpec> out;
  out.reserve(72);
  for (CellShape shape : kAllShapes)
    for (double p : kLengths)
      for (int n : kCounts) out.push_back({shape, p, n});
  return out;
}

std::vector<Constraint> study_constraints() {
  return {
      {"min-cell-length", "cells under 3 cm seal shut when bonded",
       [](const ActuatorSpec& s) { return s.cell_length_cm >= 3.0; }},
      {"max-cell-length", "cells over 4 cm exceed the sleeve width",
       [](const ActuatorSpec& s) { return s.cell_length_cm <= 4.0; }},
      {"min-cell-count", "fewer than 8 cells cannot span the joint",
       [](const ActuatorSpec& s) { return s.n_cells >= 8; }},
      {"max-cell-count", "more than 12 cells overruns the sleeve",
       [](const ActuatorSpec& s) { return s.n_cells <= 12; }},
  };
}

SelectionReport downselect(const std::vector<ActuatorSpec>& candidates,
                           const std::vector<Constraint>& constraints) {
  SelectionReport report;
  for (const auto& spec : candidates) {
    validate(spec);
    std::vector<std::string> violated;
    for (const auto& c : constraints)
      if (!c.predicate(spec)) violated.push_back(c.id);
    if (violated.empty())
      report.viable.push_back(spec);
    else
      report.rejected.push_back({spec, std::move(violated)});
  }
  return report;
}

double required_elongation(double theta_deg, double attach_d_cm) {
  if (!(attach_d_cm > 0.0))
    throw ValidationError("required_elongation: attach offset must be > 0");
  if (theta_deg < 0.0)
    throw ValidationError("required_elongation: angle must be >= 0");
  return attach_d_cm * deg_to_rad(theta_deg);
}

Screen elongation_screen(const ActuatorSpec& spec,
                         const actuator::CellDisplacementTable& table,
                         double target_theta_deg, double attach_d_cm) {
  double need = required_elongation(target_theta_deg, attach_d_cm);
  double have = actuator::estimated_elongation(spec, table);
  return have >= need ? Screen::Pass : Screen::Marginal;
}

void write_selection_csv(const SelectionReport& report, std::ostream& out) {
  out << "shape,p_cm,n,viable,violations\n";
  auto row = [&out](const ActuatorSpec& s, bool viable,
                    const std::vector<std::string>& violated) {
    out << shape_name(s.shape) << "," << io::fmt_g17(s.cell_length_cm) << ","
        << s.n_cells << "," << (viable ? 1 : 0) << ",";
    for (std::size_t i = 0; i < violated.size(); ++i) {
      if (i) out << ";";
      out << violated[i];
    }
    out << "\n";
  };
  // Interleave back into enumeration order: both lists preserve it, so a
  // two-pointer merge on identity against a fresh enumeration works.
  std::size_t vi = 0, ri = 0;
  while (vi < report.viable.size() || ri < report.rejected.size()) {
    if (ri >= report.rejected.size()) {
      row(report.viable[vi], true, {});
      ++vi;
    } else if (vi >= report.viable.size()) {
      row(report.rejected[ri].spec, false, report.rejected[ri].violated_ids);
      ++ri;
    } else {
      // Emit whichever comes first in the original enumeration; downselect
      // preserves relative order inside each list, so compare via the
      // enumeration-order key (shape, p, n).
      const auto& a = report.viable[vi];
      const auto& b = report.rejected[ri].spec;
      auto key = [](const ActuatorSpec& s) {
        return std::tuple(static_cast<int>(s.shape), s.cell_length_cm,
                          s.n_cells);
      };
      if (key(a) < key(b)) {
        row(a, true, {});
        ++vi;
      } else {
        row(b, false, report.rejected[ri].violated_ids);
        ++ri;
      }
    }
  }
}

}  // namespace bellowlab::design_space
