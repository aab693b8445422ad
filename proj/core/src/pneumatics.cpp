#include "bellowlab/pneumatics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bellowlab::pneumatics {

double PneumaticConfig::resistance(CellShape shape) const {
  switch (shape) {
    case CellShape::Square: return resistance_square;
    case CellShape::Rectangle: return resistance_rectangle;
    case CellShape::Circle: return resistance_circle;
  }
  throw std::logic_error("resistance: bad enum value");
}

PneumaticConfig shipped_defaults() { return PneumaticConfig{}; }

void validate(const PneumaticConfig& cfg) {
  if (!(cfg.steady_pressure_kPa > 0.0))
    throw ValidationError("steady pressure must be positive");
  if (!(cfg.supply_flow_cm3_s > 0.0))
    throw ValidationError("supply flow must be positive");
  if (!(cfg.resistance_square > 0.0) || !(cfg.resistance_rectangle > 0.0) ||
      !(cfg.resistance_circle > 0.0))
    throw ValidationError("resistance factors must be positive");
  if (!(cfg.completion_fraction > 0.0 && cfg.completion_fraction < 1.0))
    throw ValidationError("completion fraction must be in (0, 1)");
  if (!(cfg.window_s > 0.0))
    throw ValidationError("actuation window must be positive");
}

double time_constant(const ActuatorSpec& spec,
                     const actuator::CellDisplacementTable& table,
                     const PneumaticConfig& cfg) {
  validate(cfg);
  double volume = actuator::total_inflated_volume(spec, table);
  return cfg.resistance(spec.shape) * volume / cfg.supply_flow_cm3_s;
}

PressureSeries pressure_profile(const ActuatorSpec& spec,
                                const actuator::CellDisplacementTable& table,
                                const PneumaticConfig& cfg, Phase phase,
                                double duration_s, double dt_s,
                                double p0_kPa) {
  if (!(duration_s > 0.0) || !(dt_s > 0.0))
    throw ValidationError("pressure_profile: duration and dt must be > 0");
  double tau = time_constant(spec, table, cfg);
  double p0 = p0_kPa < 0.0 ? cfg.steady_pressure_kPa : p0_kPa;
  PressureSeries series;
  auto samples = static_cast<std::size_t>(std::llround(duration_s / dt_s));
  series.t_s.reserve(samples + 1);
  series.p_kPa.reserve(samples + 1);
  for (std::size_t i = 0; i <= samples; ++i) {
    double t = static_cast<double>(i) * dt_s;
    series.t_s.push_back(t);
    if (phase == Phase::Inflate)
      series.p_kPa.push_back(cfg.steady_pressure_kPa *
                             (1.0 - std::exp(-t / tau)));
    else
      series.p_kPa.push_back(p0 * std::exp(-t / tau));
  }
  return series;
}

double fill_after(double tau_s, double t_s) {
  if (!(tau_s > 0.0)) throw ValidationError("fill_after: tau must be > 0");
  if (t_s < 0.0) throw ValidationError("fill_after: t must be >= 0");
  return 1.0 - std::exp(-t_s / tau_s);
}

Completion classify_completion(const ActuatorSpec& spec,
                               const actuator::CellDisplacementTable& table,
                               const PneumaticConfig& cfg) {
  double tau = time_constant(spec, table, cfg);
  double settle = tau * std::log(1.0 / (1.0 - cfg.completion_fraction));
  return settle > cfg.window_s ? Completion::Incomplete
                               : Completion::Complete;
}

CalibrationGrid default_grid() {
  CalibrationGrid g;
  for (double r = 0.25; r <= 2.05 + 1e-9; r += 0.15)
    g.circle_factors.push_back(r);
  for (double r = 0.25; r <= 3.25 + 1e-9; r += 0.5)
    g.rectangle_factors.push_back(r);
  for (double q = 50.0; q <= 200.0 + 1e-9; q += 10.0)
    g.supply_flows.push_back(q);
  return g;
}

std::vector<std::string> classification_violations(
    const PneumaticConfig& cfg, const actuator::CellDisplacementTable& table,
    const std::vector<ActuatorSpec>& must_flag,
    const std::vector<ActuatorSpec>& must_pass) {
  std::vector<std::string> out;
  for (const auto& spec : must_flag)
    if (classify_completion(spec, table, cfg) != Completion::Incomplete)
      out.push_back(variant_label(spec) + ": expected incomplete, got complete");
  for (const auto& spec : must_pass)
    if (classify_completion(spec, table, cfg) != Completion::Complete)
      out.push_back(variant_label(spec) + ": expected complete, got incomplete");
  return out;
}

PneumaticConfig calibrate_resistances(
    const actuator::CellDisplacementTable& table,
    const std::vector<ActuatorSpec>& must_flag,
    const std::vector<ActuatorSpec>& must_pass, const CalibrationGrid& grid,
    const PneumaticConfig& base) {
  if (grid.circle_factors.empty() || grid.rectangle_factors.empty() ||
      grid.supply_flows.empty())
    throw ValidationError("calibration grid must not be empty");
  std::size_t best_bad = static_cast<std::size_t>(-1);
  std::vector<std::string> best_violations;
  for (double rc : grid.circle_factors) {
    for (double rr : grid.rectangle_factors) {
      for (double q : grid.supply_flows) {
        PneumaticConfig cfg = base;
        cfg.resistance_square = 1.0;
        cfg.resistance_circle = rc;
        cfg.resistance_rectangle = rr;
        cfg.supply_flow_cm3_s = q;
        auto violations =
            classification_violations(cfg, table, must_flag, must_pass);
        if (violations.empty()) return cfg;
        if (violations.size() < best_bad) {
          best_bad = violations.size();
          best_violations = std::move(violations);
        }
      }
    }
  }
  std::ostringstream os;
  os << "no grid point reproduces the target split (best point still has "
     << best_bad << " misclassifications)";
  throw CalibrationError(os.str(), best_violations);
}

}  // namespace bellowlab::pneumatics
