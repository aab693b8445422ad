#include <cmath>

#include "bellowlab/arm.hpp"
#include "bellowlab/metrics.hpp"
#include "doctest.h"

using namespace bellowlab;
using namespace bellowlab::arm;

namespace {

actuator::CellDisplacementTable table() {
  return actuator::CellDisplacementTable::builtin();
}

}  // namespace

TEST_SUITE_BEGIN("arm");

TEST_CASE("arm model validation") {
  ArmModel ok;
  CHECK_NOTHROW(validate(ok));
  ArmModel bad = ok;
  bad.attach_d_cm = 5.5;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = ok;
  bad.attach_d_cm = 0.0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = ok;
  bad.passive_rom_deg = 181.0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = ok;
  bad.upper_arm_cm = -1.0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("angle from elongation is the arc relation") {
  CHECK(angle_from_elongation(5.0, 5.0) ==
        doctest::Approx(180.0 / kPi).epsilon(1e-14));
  CHECK(angle_from_elongation(8.0, 5.0) ==
        doctest::Approx(91.67324722093171).epsilon(1e-12));
  CHECK(angle_from_elongation(0.0, 5.0) == 0.0);
  CHECK_THROWS_AS(angle_from_elongation(1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(angle_from_elongation(-1.0, 5.0), ValidationError);
}

TEST_CASE("active flexion clamps to the passive ROM") {
  auto t = table();
  ArmModel arm;
  // rectangle 3 cm, 8 cells: 6.4 cm over 5 cm -> 73.3 deg, unclamped
  CHECK(active_flexion_deg({CellShape::Rectangle, 3.0, 8}, t, arm) ==
        doctest::Approx(rad_to_deg(6.4 / 5.0)).epsilon(1e-12));
  // rectangle 3 cm, 10 cells: exactly 8.0 cm -> 91.67 deg
  CHECK(active_flexion_deg({CellShape::Rectangle, 3.0, 10}, t, arm) ==
        doctest::Approx(91.67324722093171).epsilon(1e-9));
  // square 3 cm, 8 cells: 11.44 cm -> 131 deg, clamped to 105
  CHECK(active_flexion_deg({CellShape::Square, 3.0, 8}, t, arm) == 105.0);
}

TEST_CASE("forward kinematics hits the textbook poses") {
  ArmModel arm;
  Pose straight = forward_kinematics(arm, 0.0);
  CHECK(straight.shoulder == Vec2{0.0, 0.0});
  CHECK(straight.elbow == Vec2{15.0, 0.0});
  CHECK(straight.wrist.x == doctest::Approx(26.0).epsilon(1e-14));
  CHECK(straight.wrist.y == doctest::Approx(0.0));

  Pose ninety = forward_kinematics(arm, 90.0);
  CHECK(ninety.wrist.x == doctest::Approx(15.0));
  CHECK(ninety.wrist.y == doctest::Approx(11.0));

  for (double deg : {10.0, 45.0, 73.3, 105.0}) {
    Pose pose = forward_kinematics(arm, deg);
    CHECK(norm(pose.wrist - pose.elbow) == doctest::Approx(11.0));
    CHECK(norm(pose.elbow - pose.shoulder) == doctest::Approx(15.0));
    CHECK(metrics::elbow_flexion_deg(pose.shoulder, pose.elbow, pose.wrist) ==
          doctest::Approx(deg).epsilon(1e-9));
  }
}

TEST_CASE("simulated trial geometry and phases") {
  auto t = table();
  ArmModel arm;
  pneumatics::PneumaticConfig pneu;
  // Flagged variant: fill saturates visibly inside the window, so the
  // half-time angle check is well conditioned.
  ActuatorSpec spec{CellShape::Square, 4.0, 12};
  auto traj = simulate_trial(spec, t, pneu, arm);
  REQUIRE(traj.size() == 601);
  CHECK(traj.t_s.front() == 0.0);
  CHECK(traj.t_s.back() == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(traj.rate_hz == doctest::Approx(60.0));

  double theta0 = metrics::elbow_flexion_deg(traj.shoulder[0], traj.elbow[0],
                                             traj.wrist[0]);
  double theta_active = active_flexion_deg(spec, t, arm);
  CHECK(theta0 == doctest::Approx(theta_active).epsilon(1e-9));

  // Inflation extends (angle falls), deflation flexes back (angle rises).
  double mid = metrics::elbow_flexion_deg(traj.shoulder[300], traj.elbow[300],
                                          traj.wrist[300]);
  double last = metrics::elbow_flexion_deg(traj.shoulder[600],
                                           traj.elbow[600], traj.wrist[600]);
  CHECK(mid < theta0);
  CHECK(last > mid);
  double tau = pneumatics::time_constant(spec, t, pneu);
  double f_end = 1.0 - std::exp(-5.0 / tau);
  CHECK(mid == doctest::Approx(theta_active * (1.0 - f_end)).epsilon(1e-9));

  // An unclamped variant parks at its own active angle, below the ROM.
  ActuatorSpec rect{CellShape::Rectangle, 3.0, 8};
  auto rect_traj = simulate_trial(rect, t, pneu, arm);
  CHECK(metrics::elbow_flexion_deg(rect_traj.shoulder[0], rect_traj.elbow[0],
                                   rect_traj.wrist[0]) ==
        doctest::Approx(active_flexion_deg(rect, t, arm)).epsilon(1e-9));

  CHECK(max_rigid_link_error(traj, arm) < 1e-9);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    double flex = metrics::elbow_flexion_deg(traj.shoulder[i], traj.elbow[i],
                                             traj.wrist[i]);
    CHECK(flex <= arm.passive_rom_deg + 1e-9);
    CHECK(flex >= -1e-9);
  }
}

TEST_CASE("acceleration channel matches direct central differences") {
  auto t = table();
  ArmModel arm;
  pneumatics::PneumaticConfig pneu;
  auto traj = simulate_trial({CellShape::Square, 4.0, 8}, t, pneu, arm);
  const double dt = 1.0 / 60.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    Vec2 dd = traj.wrist[i + 1] - 2.0 * traj.wrist[i] + traj.wrist[i - 1];
    double expected = norm(dd) / (dt * dt) * 0.01;
    CHECK(traj.accel_ms2[i] == doctest::Approx(expected).epsilon(1e-6));
  }
  CHECK(traj.accel_ms2.front() == doctest::Approx(traj.accel_ms2[1]));
}

TEST_CASE("trial parameters validate") {
  auto t = table();
  ArmModel arm;
  pneumatics::PneumaticConfig pneu;
  ActuatorSpec spec{CellShape::Square, 3.0, 8};
  CHECK_THROWS_AS(simulate_trial(spec, t, pneu, arm, 0.0, 1.0 / 60.0),
                  ValidationError);
  CHECK_THROWS_AS(simulate_trial(spec, t, pneu, arm, 5.0, 0.0),
                  ValidationError);
}

TEST_CASE("noise is deterministic in the seed and zero-mean") {
  auto t = table();
  ArmModel arm;
  pneumatics::PneumaticConfig pneu;
  auto clean = simulate_trial({CellShape::Circle, 3.0, 10}, t, pneu, arm);

  auto a = add_noise(clean, 42, 0.1, 0.05);
  auto b = add_noise(clean, 42, 0.1, 0.05);
  auto c = add_noise(clean, 43, 0.1, 0.05);
  REQUIRE(a.size() == clean.size());
  bool identical_ab = true, identical_ac = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.wrist[i].x != b.wrist[i].x) identical_ab = false;
    if (a.wrist[i].x != c.wrist[i].x) identical_ac = false;
  }
  CHECK(identical_ab);
  CHECK_FALSE(identical_ac);

  auto untouched = add_noise(clean, 7, 0.0, 0.0);
  bool same = true;
  for (std::size_t i = 0; i < clean.size(); ++i)
    if (untouched.wrist[i].x != clean.wrist[i].x) same = false;
  CHECK(same);

  // Sample SD of the injected position noise across all markers.
  double sigma = 0.25;
  auto noisy = add_noise(clean, 99, sigma, 0.0);
  std::vector<double> residuals;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    residuals.push_back(noisy.shoulder[i].x - clean.shoulder[i].x);
    residuals.push_back(noisy.shoulder[i].y - clean.shoulder[i].y);
    residuals.push_back(noisy.elbow[i].x - clean.elbow[i].x);
    residuals.push_back(noisy.elbow[i].y - clean.elbow[i].y);
    residuals.push_back(noisy.wrist[i].x - clean.wrist[i].x);
    residuals.push_back(noisy.wrist[i].y - clean.wrist[i].y);
  }
  REQUIRE(residuals.size() >= 1000);
  auto stat = metrics::mean_sd(residuals);
  CHECK(std::fabs(stat.sd - sigma) / sigma < 0.10);
  CHECK(std::fabs(stat.mean) < 0.05);

  CHECK(max_rigid_link_error(noisy, arm) > 0.0);
  CHECK_THROWS_AS(add_noise(clean, 1, -0.1, 0.0), ValidationError);
}

TEST_CASE("acceleration noise keeps the channel non-negative") {
  auto t = table();
  ArmModel arm;
  pneumatics::PneumaticConfig pneu;
  auto clean = simulate_trial({CellShape::Rectangle, 4.0, 8}, t, pneu, arm);
  auto noisy = add_noise(clean, 5, 0.0, 1.0);
  bool changed = false;
  for (std::size_t i = 0; i < noisy.accel_ms2.size(); ++i) {
    CHECK(noisy.accel_ms2[i] >= 0.0);
    if (noisy.accel_ms2[i] != clean.accel_ms2[i]) changed = true;
  }
  CHECK(changed);
}

TEST_SUITE_END();
