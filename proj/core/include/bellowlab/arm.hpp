#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellowlab/actuator.hpp"
#include "bellowlab/pneumatics.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::arm {

/// Planar elbow-sleeve model. The shoulder is pinned at the origin with
/// the upper arm along +x; the forearm hangs off the elbow and the bellow
/// runs across the joint at offset attach_d_cm.
struct ArmModel {
  double upper_arm_cm = 15.0;
  double forearm_cm = 11.0;
  double forearm_mass_kg = 0.38;
  double passive_rom_deg = 105.0;
  double attach_d_cm = 5.0;

  friend bool operator==(const ArmModel&, const ArmModel&) = default;
};

/// Throws ValidationError unless lengths and offset are positive, the ROM
/// is in (0, 180], and attach_d_cm <= 5 (the strap geometry caps it).
void validate(const ArmModel& arm);

/// Flexion angle produced by elongation e at offset d: e / d radians,
/// returned in degrees. Not clamped.
double angle_from_elongation(double elongation_cm, double attach_d_cm);

/// Elbow flexion available to the variant: angle_from_elongation clamped
/// to the passive ROM.
double active_flexion_deg(const ActuatorSpec& spec,
                          const actuator::CellDisplacementTable& table,
                          const ArmModel& arm);

struct Pose {
  Vec2 shoulder;
  Vec2 elbow;
  Vec2 wrist;
};

/// Pose at a flexion angle in degrees, measured as deviation from the
/// straight arm. At 0 the wrist sits at (upper + forearm, 0); positive
/// flexion rotates the forearm toward +y.
Pose forward_kinematics(const ArmModel& arm, double flexion_deg);

struct Trajectory {
  std::vector<double> t_s;
  std::vector<Vec2> shoulder;
  std::vector<Vec2> elbow;
  std::vector<Vec2> wrist;
  /// Wrist acceleration magnitude per sample, m/s^2, from second central
  /// differences on a 60 Hz grid.
  std::vector<double> accel_ms2;
  double rate_hz = 60.0;

  std::size_t size() const { return t_s.size(); }
};

/// One actuation trial: the bellow starts empty with the arm parked at
/// the variant's active flexion angle, inflates for phase_s (extension
/// stroke), then vents for phase_s (flexion stroke back toward the park
/// angle). Joint angle tracks fill fraction directly:
/// theta(t) = theta_active * (1 - fill(t)).
Trajectory simulate_trial(const ActuatorSpec& spec,
                          const actuator::CellDisplacementTable& table,
                          const pneumatics::PneumaticConfig& pneu,
                          const ArmModel& arm, double phase_s = 5.0,
                          double dt_s = 1.0 / 60.0);

/// Rebuilds traj.accel_ms2 from the wrist samples: resample to 60 Hz,
/// second central differences, map back to the trajectory timestamps.
/// simulate_trial calls this; call it yourself after loading a trajectory
/// that carries no acceleration channel.
void synthesize_accel(Trajectory& traj);

/// Adds i.i.d. zero-mean Gaussian noise: sigma_pos_cm to every marker
/// coordinate, sigma_acc_ms2 to the acceleration channel (clamped at 0
/// since it is a magnitude). Deterministic in seed.
Trajectory add_noise(const Trajectory& clean, std::uint64_t seed,
                     double sigma_pos_cm, double sigma_acc_ms2);

/// Largest deviation of |shoulder-elbow| and |elbow-wrist| from the model
/// segment lengths across the trajectory, in cm. Zero for clean output.
double max_rigid_link_error(const Trajectory& traj, const ArmModel& arm);

}  // namespace bellowlab::arm
