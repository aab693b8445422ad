#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "bellowlab/actuator.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::design_space {

/// The full 72-point candidate grid: cell lengths {1, 2, 3, 4} cm, cell
/// counts {1, 6, 8, 10, 12, 14}, all three shapes. Order is shape-major,
/// then length, then count, so the first entry is square, p=1, n=1.
std::vector<ActuatorSpec> enumerate_candidates();

/// One screening rule. Predicate returns true when the spec passes.
struct Constraint {
  std::string id;
  std::string rationale;
  std::function<bool(const ActuatorSpec&)> predicate;
};

/// The screening rules used for the study build:
///   min-cell-length   p >= 3 cm, smaller pouches seal shut
///   max-cell-length   p <= 4 cm, fits the sleeve width
///   min-cell-count    n >= 8, shorter chains cannot span the joint
///   max-cell-count    n <= 12, longer chains exceed the sleeve
std::vector<Constraint> study_constraints();

struct Rejection {
  ActuatorSpec spec;
  std::vector<std::string> violated_ids;
};

struct SelectionReport {
  std::vector<ActuatorSpec> viable;    // in enumeration order
  std::vector<Rejection> rejected;     // in enumeration order
};

/// Applies every constraint to every candidate; a candidate is viable only
/// if it passes all of them. All violated ids are recorded, not just the
/// first.
SelectionReport downselect(const std::vector<ActuatorSpec>& candidates,
                           const std::vector<Constraint>& constraints);

/// Elongation in cm needed to reach theta degrees of flexion with the
/// attachment offset d: arc length d * theta_rad.
double required_elongation(double theta_deg, double attach_d_cm);

enum class Screen { Pass, Marginal };

/// Advisory check that estimated elongation covers required_elongation(
/// target_theta_deg, attach_d_cm). Never rejects; marginal designs stay
/// in the pool and get flagged downstream by the pneumatic model.
Screen elongation_screen(const ActuatorSpec& spec,
                         const actuator::CellDisplacementTable& table,
                         double target_theta_deg, double attach_d_cm);

/// Schema: "shape,p_cm,n,viable,violations". violations is a
/// semicolon-joined id list, empty for viable rows. Rows in enumeration
/// order, viable flag as 0/1.
void write_selection_csv(const SelectionReport& report, std::ostream& out);

}  // namespace bellowlab::design_space
