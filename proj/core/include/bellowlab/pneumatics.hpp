#pragma once

#include <string>
#include <vector>

#include "bellowlab/actuator.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::pneumatics {

/// First-order lumped model of the pump + tubing + bellow chain. All
/// shapes share one supply; shape-dependent flow restriction is folded
/// into a per-shape resistance factor.
struct PneumaticConfig {
  double steady_pressure_kPa = 35.0;
  double supply_flow_cm3_s = 130.0;
  double resistance_square = 1.0;
  double resistance_rectangle = 2.75;
  double resistance_circle = 1.15;
  double completion_fraction = 0.95;
  double window_s = 5.0;

  double resistance(CellShape shape) const;
  friend bool operator==(const PneumaticConfig&,
                         const PneumaticConfig&) = default;
};

/// The calibrated defaults committed in core/data/pneumatic_defaults.cfg.
PneumaticConfig shipped_defaults();

void validate(const PneumaticConfig& cfg);

/// tau = r_shape * V_total / Q, in seconds.
double time_constant(const ActuatorSpec& spec,
                     const actuator::CellDisplacementTable& table,
                     const PneumaticConfig& cfg);

enum class Phase { Inflate, Deflate };

struct PressureSeries {
  std::vector<double> t_s;
  std::vector<double> p_kPa;
};

/// Inflate: p(t) = p_ss (1 - e^{-t/tau}) from empty. Deflate: p(t) =
/// p0 e^{-t/tau}, p0 defaulting to p_ss. Sampled at dt from t = 0 to
/// duration inclusive.
PressureSeries pressure_profile(const ActuatorSpec& spec,
                                const actuator::CellDisplacementTable& table,
                                const PneumaticConfig& cfg, Phase phase,
                                double duration_s, double dt_s,
                                double p0_kPa = -1.0);

enum class Completion { Complete, Incomplete };

/// Incomplete iff the time to reach completion_fraction of the steady
/// state, tau * ln(1 / (1 - f)), exceeds the actuation window. The same
/// threshold governs both strokes because charge and discharge share tau.
Completion classify_completion(const ActuatorSpec& spec,
                               const actuator::CellDisplacementTable& table,
                               const PneumaticConfig& cfg);

/// Fill fraction reached after t seconds of inflation from empty.
double fill_after(double tau_s, double t_s);

/// Search grid for calibrate_resistances, iterated circle-major, then
/// rectangle, then flow, ascending.
struct CalibrationGrid {
  std::vector<double> circle_factors;
  std::vector<double> rectangle_factors;
  std::vector<double> supply_flows;
};

CalibrationGrid default_grid();

class CalibrationError : public std::runtime_error {
public:
  explicit CalibrationError(const std::string& what,
                            std::vector<std::string> violations = {})
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

/// Lists, per variant, how cfg misclassifies it against the target split;
/// empty result means cfg reproduces the split exactly.
std::vector<std::string> classification_violations(
    const PneumaticConfig& cfg, const actuator::CellDisplacementTable& table,
    const std::vector<ActuatorSpec>& must_flag,
    const std::vector<ActuatorSpec>& must_pass);

/// Returns the first grid point (in grid order) whose config flags exactly
/// must_flag out of must_flag + must_pass. Square resistance is the unit
/// reference. Throws CalibrationError with the best point's violation list
/// if no grid point works.
PneumaticConfig calibrate_resistances(
    const actuator::CellDisplacementTable& table,
    const std::vector<ActuatorSpec>& must_flag,
    const std::vector<ActuatorSpec>& must_pass,
    const CalibrationGrid& grid = default_grid(),
    const PneumaticConfig& base = PneumaticConfig{});

}  // namespace bellowlab::pneumatics
