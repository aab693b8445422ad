#include "bellowlab/arm.hpp"

#include <algorithm>
#include <cmath>

#include "bellowlab/numerics.hpp"

namespace bellowlab::arm {

void validate(const ArmModel& arm) {
  if (!(arm.upper_arm_cm > 0.0) || !(arm.forearm_cm > 0.0))
    throw ValidationError("arm segment lengths must be positive");
  if (!(arm.forearm_mass_kg > 0.0))
    throw ValidationError("forearm mass must be positive");
  if (!(arm.passive_rom_deg > 0.0 && arm.passive_rom_deg <= 180.0))
    throw ValidationError("passive ROM must be in (0, 180] degrees");
  if (!(arm.attach_d_cm > 0.0))
    throw ValidationError("attachment offset must be positive");
  if (arm.attach_d_cm > 5.0)
    throw ValidationError("attachment offset above 5 cm breaks the strap "
                          "geometry");
}

double angle_from_elongation(double elongation_cm, double attach_d_cm) {
  if (!(attach_d_cm > 0.0))
    throw ValidationError("attachment offset must be positive");
  if (elongation_cm < 0.0)
    throw ValidationError("elongation must be non-negative");
  return rad_to_deg(elongation_cm / attach_d_cm);
}

double active_flexion_deg(const ActuatorSpec& spec,
                          const actuator::CellDisplacementTable& table,
                          const ArmModel& arm) {
  validate(arm);
  double e = actuator::estimated_elongation(spec, table);
  return std::min(angle_from_elongation(e, arm.attach_d_cm),
                  arm.passive_rom_deg);
}

Pose forward_kinematics(const ArmModel& arm, double flexion_deg) {
  validate(arm);
  Pose pose;
  pose.shoulder = {0.0, 0.0};
  pose.elbow = {arm.upper_arm_cm, 0.0};
  // Flexion 0 keeps the forearm along +x; positive flexion rotates it
  // back over the upper arm through +y.
  double a = deg_to_rad(flexion_deg);
  pose.wrist = {pose.elbow.x + arm.forearm_cm * std::cos(a),
                pose.elbow.y + arm.forearm_cm * std::sin(a)};
  return pose;
}

Trajectory simulate_trial(const ActuatorSpec& spec,
                          const actuator::CellDisplacementTable& table,
                          const pneumatics::PneumaticConfig& pneu,
                          const ArmModel& arm, double phase_s, double dt_s) {
  validate(arm);
  if (!(phase_s > 0.0) || !(dt_s > 0.0))
    throw ValidationError("simulate_trial: phase and dt must be positive");
  double tau = pneumatics::time_constant(spec, table, pneu);
  double theta_active = active_flexion_deg(spec, table, arm);

  auto half = static_cast<std::size_t>(std::llround(phase_s / dt_s));
  Trajectory traj;
  traj.rate_hz = 1.0 / dt_s;
  std::size_t n = 2 * half + 1;
  traj.t_s.reserve(n);
  traj.shoulder.reserve(n);
  traj.elbow.reserve(n);
  traj.wrist.reserve(n);

  double fill_end = 1.0 - std::exp(-phase_s / tau);
  for (std::size_t i = 0; i < n; ++i) {
    double t = static_cast<double>(i) * dt_s;
    double fill;
    if (i <= half)
      fill = 1.0 - std::exp(-t / tau);
    else
      fill = fill_end * std::exp(-(t - phase_s) / tau);
    double theta = theta_active * (1.0 - fill);
    Pose pose = forward_kinematics(arm, theta);
    traj.t_s.push_back(t);
    traj.shoulder.push_back(pose.shoulder);
    traj.elbow.push_back(pose.elbow);
    traj.wrist.push_back(pose.wrist);
  }

  synthesize_accel(traj);
  return traj;
}

void synthesize_accel(Trajectory& traj) {
  if (traj.size() < 3)
    throw ValidationError("synthesize_accel: need at least three samples");
  // Mimic a 60 Hz IMU. Resample the wrist to the 60 Hz grid, take second
  // central differences there, then map back to the trajectory
  // timestamps. At 60 Hz sampling this is the identity grid.
  const double imu_dt = 1.0 / 60.0;
  const double dt_s = 1.0 / traj.rate_hz;
  double t_last = traj.t_s.back();
  auto imu_n = static_cast<std::size_t>(std::floor(t_last / imu_dt + 0.5));
  if (imu_n < 2)
    throw ValidationError("synthesize_accel: trajectory shorter than the "
                          "60 Hz differencing stencil");
  std::vector<Vec2> w60(imu_n + 1);
  for (std::size_t i = 0; i <= imu_n; ++i) {
    double t = std::min(static_cast<double>(i) * imu_dt, t_last);
    // linear interpolation over the uniform dt grid
    double u = t / dt_s;
    auto lo = static_cast<std::size_t>(std::min(
        std::floor(u), static_cast<double>(traj.size() - 1)));
    std::size_t hi = std::min(lo + 1, traj.size() - 1);
    double frac = u - static_cast<double>(lo);
    w60[i] = traj.wrist[lo] + frac * (traj.wrist[hi] - traj.wrist[lo]);
  }
  std::vector<double> a60(imu_n + 1, 0.0);
  for (std::size_t i = 1; i + 1 <= imu_n; ++i) {
    Vec2 dd = w60[i + 1] - 2.0 * w60[i] + w60[i - 1];
    // cm/s^2 -> m/s^2
    a60[i] = norm(dd) / (imu_dt * imu_dt) * 0.01;
  }
  a60[0] = a60[1];
  a60[imu_n] = a60[imu_n - 1];
  traj.accel_ms2.resize(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    double u = traj.t_s[i] / imu_dt;
    auto lo = static_cast<std::size_t>(
        std::min(std::floor(u), static_cast<double>(imu_n)));
    std::size_t hi = std::min(lo + 1, imu_n);
    double frac = u - static_cast<double>(lo);
    traj.accel_ms2[i] = a60[lo] + frac * (a60[hi] - a60[lo]);
  }
}

Trajectory add_noise(const Trajectory& clean, std::uint64_t seed,
                     double sigma_pos_cm, double sigma_acc_ms2) {
  if (sigma_pos_cm < 0.0 || sigma_acc_ms2 < 0.0)
    throw ValidationError("noise sigmas must be non-negative");
  Trajectory noisy = clean;
  if (sigma_pos_cm == 0.0 && sigma_acc_ms2 == 0.0) return noisy;
  numerics::GaussianSampler g(seed);
  auto jitter = [&](std::vector<Vec2>& pts) {
    for (auto& p : pts) {
      p.x += sigma_pos_cm * g.next();
      p.y += sigma_pos_cm * g.next();
    }
  };
  if (sigma_pos_cm > 0.0) {
    jitter(noisy.shoulder);
    jitter(noisy.elbow);
    jitter(noisy.wrist);
  }
  if (sigma_acc_ms2 > 0.0)
    for (auto& a : noisy.accel_ms2)
      a = std::max(0.0, a + sigma_acc_ms2 * g.next());
  return noisy;
}

double max_rigid_link_error(const Trajectory& traj, const ArmModel& arm) {
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    double upper = norm(traj.elbow[i] - traj.shoulder[i]);
    double fore = norm(traj.wrist[i] - traj.elbow[i]);
    worst = std::max(worst, std::fabs(upper - arm.upper_arm_cm));
    worst = std::max(worst, std::fabs(fore - arm.forearm_cm));
  }
  return worst;
}

}  // namespace bellowlab::arm
