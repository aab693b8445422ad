#include <algorithm>
#include <cmath>
#include <vector>

#include "bellowlab/arm.hpp"
#include "bellowlab/metrics.hpp"
#include "doctest.h"

using namespace bellowlab;
using namespace bellowlab::metrics;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("path length sums segment lengths") {
  std::vector<Vec2> pts = {{0, 0}, {3, 0}, {3, 4}};
  CHECK(path_length(pts) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(path_length(std::vector<Vec2>{{1, 1}}) == 0.0);
  CHECK(path_length(std::vector<Vec2>{}) == 0.0);
}

TEST_CASE("unit semicircle sampled at 1 degree") {
  std::vector<Vec2> pts;
  for (int deg = 0; deg <= 180; ++deg) {
    double a = deg_to_rad(deg);
    pts.push_back({std::cos(a), std::sin(a)});
  }
  double path = path_length(pts);
  double si = straightness_index(pts);
  CHECK(std::fabs(path - kPi) < 1e-4);
  CHECK(std::fabs(si - kPi / 2.0) < 1e-4);
}

TEST_CASE("straightness index degeneracy") {
  std::vector<Vec2> straight = {{0, 0}, {1, 0}, {2, 0}, {5, 0}};
  CHECK(straightness_index(straight) == doctest::Approx(1.0).epsilon(1e-14));
  std::vector<Vec2> closed = {{0, 0}, {1, 0}, {1, 1}, {0, 0}};
  CHECK_THROWS_AS(straightness_index(closed), ValidationError);
  std::vector<Vec2> tiny = {{0, 0}, {1, 0}, {5e-10, 0}};
  CHECK_THROWS_AS(straightness_index(tiny), ValidationError);
  CHECK_THROWS_AS(straightness_index(std::vector<Vec2>{{0, 0}}),
                  ValidationError);
}

TEST_CASE("mean absolute jerk of a sinusoidal acceleration") {
  // a(t) = sin(2 pi t): mean |da/dt| over whole periods is 4.0.
  std::vector<double> accel;
  const double rate = 60.0;
  for (int i = 0; i <= 5 * 60; ++i)
    accel.push_back(std::sin(2.0 * kPi * i / rate));
  double jerk = mean_abs_jerk(accel, rate);
  CHECK(std::fabs(jerk - 4.0) / 4.0 < 0.01);
}

TEST_CASE("jerk is invariant under time reversal") {
  std::vector<double> accel = {0.0, 0.3, 1.1, 0.9, 2.4, 2.2, 0.7, 0.1};
  std::vector<double> reversed(accel.rbegin(), accel.rend());
  CHECK(mean_abs_jerk(accel, 60.0) ==
        doctest::Approx(mean_abs_jerk(reversed, 60.0)).epsilon(1e-14));
}

TEST_CASE("jerk input validation") {
  CHECK_THROWS_AS(mean_abs_jerk(std::vector<double>{1.0}, 60.0),
                  ValidationError);
  CHECK_THROWS_AS(mean_abs_jerk(std::vector<double>{1.0, 2.0}, 0.0),
                  ValidationError);
}

TEST_CASE("elbow flexion angle") {
  CHECK(elbow_flexion_deg({0, 0}, {1, 0}, {2, 0}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(elbow_flexion_deg({0, 0}, {1, 0}, {1, 1}) == doctest::Approx(90.0));
  CHECK(elbow_flexion_deg({0, 0}, {1, 0}, {0, 0.0001}) >
        doctest::Approx(170.0));
  CHECK_THROWS_AS(elbow_flexion_deg({0, 0}, {0, 0}, {1, 1}),
                  ValidationError);
}

TEST_CASE("trial metrics cover the extension stroke") {
  auto table = actuator::CellDisplacementTable::builtin();
  arm::ArmModel armm;
  pneumatics::PneumaticConfig pneu;
  ActuatorSpec spec{CellShape::Square, 3.0, 8};
  auto traj = arm::simulate_trial(spec, table, pneu, armm);
  auto m = trial_metrics(traj, spec, 3);
  CHECK(m.variant == spec);
  CHECK(m.trial == 3);

  double theta = arm::active_flexion_deg(spec, table, armm);
  double tau = pneumatics::time_constant(spec, table, pneu);
  double f_end = 1.0 - std::exp(-5.0 / tau);
  double swept = deg_to_rad(theta) * f_end;
  // Wrist path is an arc of the forearm circle; chordal sampling
  // underestimates by O(dtheta^2).
  CHECK(m.path_cm == doctest::Approx(11.0 * swept).epsilon(5e-3));
  double chord = 2.0 * 11.0 * std::sin(swept / 2.0);
  CHECK(m.si == doctest::Approx(11.0 * swept / chord).epsilon(5e-3));
  CHECK(m.angle_deg == doctest::Approx(theta).epsilon(1e-9));
  CHECK(m.jerk_ms3 > 0.0);

  CHECK_THROWS_AS(trial_metrics(arm::Trajectory{}, spec, 0), ValidationError);
}

TEST_CASE("mean and sample SD") {
  std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  auto s = mean_sd(v);
  CHECK(s.mean == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
  auto single = mean_sd(std::vector<double>{7.0});
  CHECK(single.mean == 7.0);
  CHECK(single.sd == 0.0);
  CHECK_THROWS_AS(mean_sd(std::vector<double>{}), ValidationError);
}

TEST_CASE("summaries group by variant in (p, n, shape) order") {
  std::vector<TrialMetrics> trials;
  ActuatorSpec a{CellShape::Circle, 3.0, 8};
  ActuatorSpec b{CellShape::Square, 4.0, 8};
  ActuatorSpec c{CellShape::Square, 3.0, 10};
  for (int k = 0; k < 3; ++k) {
    trials.push_back({b, k, 10.0 + k, 1.0, 5.0, 90.0});
    trials.push_back({a, k, 20.0 + k, 1.1, 6.0, 80.0});
    trials.push_back({c, k, 30.0 + k, 1.2, 7.0, 70.0});
  }
  auto rows = summarize(trials);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].variant == a);  // p=3, n=8
  CHECK(rows[1].variant == c);  // p=3, n=10
  CHECK(rows[2].variant == b);  // p=4, n=8
  CHECK(rows[0].n_trials == 3);
  CHECK(rows[0].path_cm.mean == doctest::Approx(21.0));
  CHECK(rows[0].path_cm.sd == doctest::Approx(1.0));
  CHECK_FALSE(rows[0].degenerate);

  auto lone = summarize(std::vector<TrialMetrics>{
      {a, 0, 12.0, 1.05, 5.5, 60.0}});
  REQUIRE(lone.size() == 1);
  CHECK(lone[0].degenerate);
  CHECK(lone[0].path_cm.sd == 0.0);
}

TEST_SUITE_END();
