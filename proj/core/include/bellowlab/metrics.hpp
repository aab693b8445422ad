#pragma once

#include <span>
#include <vector>

#include "bellowlab/arm.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::metrics {

/// Sum of straight-line distances between consecutive samples, in cm.
double path_length(std::span<const Vec2> points);

/// path_length / chord, chord being first-to-last distance. Throws
/// ValidationError when the chord is shorter than 1e-9 cm; the ratio is
/// meaningless for a closed or stationary path.
double straightness_index(std::span<const Vec2> points);

/// Mean |da/dt| of an acceleration-magnitude series sampled at rate_hz,
/// central differences inside, one-sided at the ends, in m/s^3.
double mean_abs_jerk(std::span<const double> accel_ms2, double rate_hz);

/// Elbow flexion in degrees: 180 minus the interior angle at the elbow.
/// Straight arm gives 0.
double elbow_flexion_deg(Vec2 shoulder, Vec2 elbow, Vec2 wrist);

/// Peak elbow flexion reached over the trajectory.
double flexion_range_deg(const arm::Trajectory& traj);

struct TrialMetrics {
  ActuatorSpec variant;
  int trial = 0;
  double path_cm = 0.0;
  double si = 0.0;
  double jerk_ms3 = 0.0;
  double angle_deg = 0.0;
};

/// Wrist-path metrics of one trial, computed on the extension stroke
/// (samples [0, size/2]); angle_deg is the flexion range over that stroke.
TrialMetrics trial_metrics(const arm::Trajectory& traj,
                           const ActuatorSpec& variant, int trial);

struct Stat {
  double mean = 0.0;
  double sd = 0.0;  // sample SD (n-1); 0 when n == 1
};

struct SummaryRow {
  ActuatorSpec variant;
  int n_trials = 0;
  Stat path_cm, si, jerk_ms3, angle_deg;
  bool degenerate = false;  // single trial, SD not estimable
};

Stat mean_sd(std::span<const double> values);

/// Per-variant mean and SD of each metric, rows ordered by
/// (cell length, cell count, shape).
std::vector<SummaryRow> summarize(std::span<const TrialMetrics> trials);

}  // namespace bellowlab::metrics
