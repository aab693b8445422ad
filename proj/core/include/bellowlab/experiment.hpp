#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bellowlab/arm.hpp"
#include "bellowlab/metrics.hpp"
#include "bellowlab/pneumatics.hpp"
#include "bellowlab/stats.hpp"

namespace bellowlab::experiment {

struct ExperimentConfig {
  /// Variants to run; empty means every viable design from the study
  /// constraints.
  std::vector<ActuatorSpec> variants;
  arm::ArmModel arm;
  pneumatics::PneumaticConfig pneumatics;
  int trials_per_variant = 10;
  double phase_s = 5.0;
  double dt_s = 1.0 / 60.0;
  std::uint64_t seed = 1;
  /// Measurement noise. Zero keeps runs fully deterministic sample-wise;
  /// nonzero runs stay deterministic in the seed.
  double sigma_pos_cm = 0.0;
  double sigma_acc_ms2 = 0.0;
};

void validate(const ExperimentConfig& cfg);

/// Seed for (variant_index, trial), derived from the experiment seed by
/// splitmix64 so trials draw independent streams.
std::uint64_t trial_seed(std::uint64_t base, std::size_t variant_index,
                         int trial);

struct ExperimentResult {
  std::vector<ActuatorSpec> variants;            // run order
  std::vector<metrics::TrialMetrics> trials;     // variant-major
};

/// Runs trials_per_variant trials per variant (variants sorted by
/// (p, n, shape)) and computes per-trial metrics. Optionally keeps each
/// trial's trajectory via the sink callback.
ExperimentResult run_experiment(
    const ExperimentConfig& cfg, const actuator::CellDisplacementTable& table,
    const std::function<void(const ActuatorSpec&, int,
                             const arm::Trajectory&)>& sink = nullptr);

/// Mean of one metric over all trials whose variant maps to the given
/// factor group. Used by the ordering checks and the report.
double factor_mean(std::span<const metrics::TrialMetrics> trials,
                   stats::Metric metric, stats::Factor factor,
                   const std::string& group);

}  // namespace bellowlab::experiment
