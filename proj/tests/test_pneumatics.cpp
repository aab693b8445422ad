#include <cmath>
#include <set>
#include <sstream>

#include "bellowlab/design_space.hpp"
#include "bellowlab/io/config.hpp"
#include "bellowlab/pneumatics.hpp"
#include "doctest.h"

using namespace bellowlab;
using namespace bellowlab::pneumatics;

namespace {

actuator::CellDisplacementTable table() {
  return actuator::CellDisplacementTable::builtin();
}

std::vector<ActuatorSpec> viable18() {
  auto report = design_space::downselect(design_space::enumerate_candidates(),
                                         design_space::study_constraints());
  return report.viable;
}

std::set<std::string> flagged_labels(const PneumaticConfig& cfg) {
  std::set<std::string> out;
  for (const auto& spec : viable18())
    if (classify_completion(spec, table(), cfg) == Completion::Incomplete)
      out.insert(variant_label(spec));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("pneumatics");

TEST_CASE("time constant is r * V / Q") {
  auto t = table();
  PneumaticConfig cfg;  // defaults
  ActuatorSpec sq38{CellShape::Square, 3.0, 8};
  double volume = actuator::total_inflated_volume(sq38, t);
  CHECK(time_constant(sq38, t, cfg) ==
        doctest::Approx(1.0 * volume / 130.0).epsilon(1e-14));

  PneumaticConfig slow = cfg;
  slow.supply_flow_cm3_s = 65.0;
  CHECK(time_constant(sq38, t, slow) ==
        doctest::Approx(2.0 * time_constant(sq38, t, cfg)).epsilon(1e-12));

  ActuatorSpec bigger{CellShape::Square, 3.0, 12};
  CHECK(time_constant(bigger, t, cfg) > time_constant(sq38, t, cfg));
  CHECK(cfg.resistance(CellShape::Rectangle) == 2.75);
  CHECK(cfg.resistance(CellShape::Circle) == 1.15);
}

TEST_CASE("inflate profile is a saturating exponential") {
  auto t = table();
  PneumaticConfig cfg;
  ActuatorSpec spec{CellShape::Circle, 4.0, 10};
  double tau = time_constant(spec, t, cfg);
  auto series = pressure_profile(spec, t, cfg, Phase::Inflate, 5.0, 0.01);
  REQUIRE(series.t_s.size() == 501);
  CHECK(series.p_kPa.front() == 0.0);
  for (std::size_t i = 1; i < series.p_kPa.size(); ++i)
    CHECK(series.p_kPa[i] > series.p_kPa[i - 1]);
  CHECK(series.p_kPa.back() <= cfg.steady_pressure_kPa);
  // Value at one time constant.
  std::size_t idx = static_cast<std::size_t>(std::llround(tau / 0.01));
  if (idx < series.p_kPa.size()) {
    double expected =
        cfg.steady_pressure_kPa * (1.0 - std::exp(-series.t_s[idx] / tau));
    CHECK(series.p_kPa[idx] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("deflate profile decays from p0") {
  auto t = table();
  PneumaticConfig cfg;
  ActuatorSpec spec{CellShape::Square, 3.0, 10};
  double tau = time_constant(spec, t, cfg);
  auto series = pressure_profile(spec, t, cfg, Phase::Deflate, 5.0, 0.05);
  CHECK(series.p_kPa.front() == cfg.steady_pressure_kPa);
  for (std::size_t i = 1; i < series.p_kPa.size(); ++i)
    CHECK(series.p_kPa[i] < series.p_kPa[i - 1]);
  CHECK(series.p_kPa.back() ==
        doctest::Approx(cfg.steady_pressure_kPa * std::exp(-5.0 / tau))
            .epsilon(1e-12));
  auto custom = pressure_profile(spec, t, cfg, Phase::Deflate, 1.0, 0.5, 10.0);
  CHECK(custom.p_kPa.front() == 10.0);
}

TEST_CASE("every unflagged variant vents below 5% within the window") {
  auto t = table();
  PneumaticConfig cfg;
  for (const auto& spec : viable18()) {
    if (classify_completion(spec, t, cfg) == Completion::Incomplete) continue;
    double tau = time_constant(spec, t, cfg);
    CHECK(std::exp(-cfg.window_s / tau) < 0.05);
  }
}

TEST_CASE("shipped defaults flag exactly the four slow variants") {
  auto flagged = flagged_labels(PneumaticConfig{});
  std::set<std::string> want = {"square-4-10", "square-4-12",
                                "rectangle-4-12", "circle-4-12"};
  CHECK(flagged == want);
}

TEST_CASE("completion threshold is strict") {
  auto t = table();
  ActuatorSpec spec{CellShape::Square, 3.0, 8};
  PneumaticConfig cfg;
  double volume = actuator::total_inflated_volume(spec, t);
  double settle_factor = std::log(1.0 / (1.0 - cfg.completion_fraction));
  // Q at the settle-time boundary, nudged to either side of it.
  double q_boundary = volume * settle_factor / cfg.window_s;
  cfg.supply_flow_cm3_s = q_boundary * (1.0 + 1e-9);
  double tau = time_constant(spec, t, cfg);
  CHECK(tau * settle_factor == doctest::Approx(cfg.window_s).epsilon(1e-6));
  CHECK(classify_completion(spec, t, cfg) == Completion::Complete);
  cfg.supply_flow_cm3_s = q_boundary * (1.0 - 1e-9);
  CHECK(classify_completion(spec, t, cfg) == Completion::Incomplete);
}

TEST_CASE("rectangle-4-12 is slower than circle-4-10 under defaults") {
  auto t = table();
  PneumaticConfig cfg;
  CHECK(time_constant({CellShape::Rectangle, 4.0, 12}, t, cfg) >
        time_constant({CellShape::Circle, 4.0, 10}, t, cfg));
}

TEST_CASE("fill_after") {
  CHECK(fill_after(1.0, 0.0) == 0.0);
  CHECK(fill_after(2.0, 2.0) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK_THROWS_AS(fill_after(0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(fill_after(1.0, -1.0), ValidationError);
}

TEST_CASE("config validation") {
  PneumaticConfig cfg;
  cfg.completion_fraction = 1.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg = PneumaticConfig{};
  cfg.supply_flow_cm3_s = 0.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg = PneumaticConfig{};
  cfg.resistance_rectangle = -1.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  CHECK_NOTHROW(validate(PneumaticConfig{}));
}

TEST_CASE("shipped defaults match the committed config file") {
  auto cfg = io::load_pneumatic_config_file(std::string(BELLOWLAB_DATA_DIR) +
                                            "/pneumatic_defaults.cfg");
  CHECK(cfg == shipped_defaults());
}

TEST_CASE("calibration finds the first feasible grid point") {
  auto t = table();
  std::vector<ActuatorSpec> must_flag = {{CellShape::Square, 4.0, 10},
                                         {CellShape::Square, 4.0, 12},
                                         {CellShape::Rectangle, 4.0, 12},
                                         {CellShape::Circle, 4.0, 12}};
  std::vector<ActuatorSpec> must_pass;
  for (const auto& spec : viable18()) {
    bool flagged = false;
    for (const auto& f : must_flag)
      if (f == spec) flagged = true;
    if (!flagged) must_pass.push_back(spec);
  }
  auto cfg = calibrate_resistances(t, must_flag, must_pass);
  CHECK(classification_violations(cfg, t, must_flag, must_pass).empty());
  // Grid order is circle-major then rectangle then flow, all ascending,
  // so the first hit is pinned.
  CHECK(cfg.resistance_circle == doctest::Approx(1.0));
  CHECK(cfg.resistance_rectangle == doctest::Approx(2.25));
  CHECK(cfg.supply_flow_cm3_s == doctest::Approx(110.0));
  CHECK(cfg.resistance_square == 1.0);

  // The shipped defaults also reproduce the split; they sit deeper in the
  // feasible region than the first grid hit.
  CHECK(classification_violations(PneumaticConfig{}, t, must_flag, must_pass)
            .empty());
}

TEST_CASE("equal-resistance model cannot reproduce the split") {
  auto t = table();
  std::vector<ActuatorSpec> must_flag = {{CellShape::Square, 4.0, 10},
                                         {CellShape::Square, 4.0, 12},
                                         {CellShape::Rectangle, 4.0, 12},
                                         {CellShape::Circle, 4.0, 12}};
  std::vector<ActuatorSpec> must_pass;
  for (const auto& spec : viable18()) {
    bool flagged = false;
    for (const auto& f : must_flag)
      if (f == spec) flagged = true;
    if (!flagged) must_pass.push_back(spec);
  }
  CalibrationGrid grid;
  grid.circle_factors = {1.0};
  grid.rectangle_factors = {1.0};
  for (double q = 20.0; q <= 400.0; q += 0.5) grid.supply_flows.push_back(q);
  CHECK_THROWS_AS(
      calibrate_resistances(t, must_flag, must_pass, grid),
      CalibrationError);
  try {
    calibrate_resistances(t, must_flag, must_pass, grid);
  } catch (const CalibrationError& e) {
    CHECK_FALSE(e.violations().empty());
  }

  // Interval argument: with one shared resistance the completion boundary
  // depends on volume alone. Flagging rectangle-4-12 needs Q below
  // V(rect-4-12) * ln(20) / window, but keeping square-4-8 complete needs
  // Q at or above V(square-4-8) * ln(20) / window, and the latter volume
  // is larger. Empty interval, independent of the grid.
  double k = std::log(20.0) / 5.0;
  double q_upper = actuator::total_inflated_volume(
                       {CellShape::Rectangle, 4.0, 12}, t) * k;
  double q_lower = actuator::total_inflated_volume(
                       {CellShape::Square, 4.0, 8}, t) * k;
  CHECK(q_lower > q_upper);
}

TEST_CASE("empty calibration grid is rejected") {
  CHECK_THROWS_AS(
      calibrate_resistances(table(), {}, {}, CalibrationGrid{}),
      ValidationError);
}

TEST_SUITE_END();
