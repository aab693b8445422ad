#include "bellowlab/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

namespace bellowlab::metrics {

double path_length(std::span<const Vec2> points) {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i)
    total += norm(points[i] - points[i - 1]);
  return total;
}

double straightness_index(std::span<const Vec2> points) {
  if (points.size() < 2)
    throw ValidationError("straightness_index: need at least two samples");
  double chord = norm(points.back() - points.front());
  if (chord < 1e-9)
    throw ValidationError("straightness_index: chord below 1e-9 cm, the "
                          "index is undefined for a closed path");
  return path_length(points) / chord;
}

double mean_abs_jerk(std::span<const double> accel_ms2, double rate_hz) {
  if (accel_ms2.size() < 2)
    throw ValidationError("mean_abs_jerk: need at least two samples");
  if (!(rate_hz > 0.0))
    throw ValidationError("mean_abs_jerk: rate must be positive");
  double dt = 1.0 / rate_hz;
  std::size_t n = accel_ms2.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d;
    if (i == 0)
      d = (accel_ms2[1] - accel_ms2[0]) / dt;
    else if (i == n - 1)
      d = (accel_ms2[n - 1] - accel_ms2[n - 2]) / dt;
    else
      d = (accel_ms2[i + 1] - accel_ms2[i - 1]) / (2.0 * dt);
    sum += std::fabs(d);
  }
  return sum / static_cast<double>(n);
}

double elbow_flexion_deg(Vec2 shoulder, Vec2 elbow, Vec2 wrist) {
  Vec2 u = shoulder - elbow;
  Vec2 v = wrist - elbow;
  double nu = norm(u), nv = norm(v);
  if (nu < 1e-12 || nv < 1e-12)
    throw ValidationError("elbow_flexion_deg: degenerate joint");
  double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
  return 180.0 - rad_to_deg(std::acos(c));
}

double flexion_range_deg(const arm::Trajectory& traj) {
  double peak = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i)
    peak = std::max(peak, elbow_flexion_deg(traj.shoulder[i], traj.elbow[i],
                                            traj.wrist[i]));
  return peak;
}

TrialMetrics trial_metrics(const arm::Trajectory& traj,
                           const ActuatorSpec& variant, int trial) {
  if (traj.size() < 3)
    throw ValidationError("trial_metrics: trajectory too short");
  std::size_t half = traj.size() / 2;
  std::span<const Vec2> stroke(traj.wrist.data(), half + 1);
  std::span<const double> accel(traj.accel_ms2.data(), half + 1);

  TrialMetrics m;
  m.variant = variant;
  m.trial = trial;
  m.path_cm = path_length(stroke);
  m.si = straightness_index(stroke);
  m.jerk_ms3 = mean_abs_jerk(accel, traj.rate_hz);
  double peak = 0.0;
  for (std::size_t i = 0; i <= half; ++i)
    peak = std::max(peak, elbow_flexion_deg(traj.shoulder[i], traj.elbow[i],
                                            traj.wrist[i]));
  m.angle_deg = peak;
  return m;
}

Stat mean_sd(std::span<const double> values) {
  if (values.empty()) throw ValidationError("mean_sd: empty sample");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  Stat s;
  s.mean = mean;
  s.sd = values.size() > 1
             ? std::sqrt(ss / static_cast<double>(values.size() - 1))
             : 0.0;
  return s;
}

std::vector<SummaryRow> summarize(std::span<const TrialMetrics> trials) {
  if (trials.empty()) throw ValidationError("summarize: no trials");
  std::map<std::tuple<double, int, int>,
           std::array<std::vector<double>, 4>>
      by_variant;
  std::map<std::tuple<double, int, int>, ActuatorSpec> specs;
  for (const auto& t : trials) {
    auto key = std::tuple(t.variant.cell_length_cm, t.variant.n_cells,
                          static_cast<int>(t.variant.shape));
    auto& cols = by_variant[key];
    cols[0].push_back(t.path_cm);
    cols[1].push_back(t.si);
    cols[2].push_back(t.jerk_ms3);
    cols[3].push_back(t.angle_deg);
    specs.emplace(key, t.variant);
  }
  std::vector<SummaryRow> rows;
  rows.reserve(by_variant.size());
  for (const auto& [key, cols] : by_variant) {
    SummaryRow row;
    row.variant = specs.at(key);
    row.n_trials = static_cast<int>(cols[0].size());
    row.path_cm = mean_sd(cols[0]);
    row.si = mean_sd(cols[1]);
    row.jerk_ms3 = mean_sd(cols[2]);
    row.angle_deg = mean_sd(cols[3]);
    row.degenerate = row.n_trials == 1;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bellowlab::metrics
