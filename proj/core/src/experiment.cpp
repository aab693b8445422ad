#include "bellowlab/experiment.hpp"

#include <algorithm>

#include "bellowlab/design_space.hpp"
#include "bellowlab/numerics.hpp"

namespace bellowlab::experiment {

void validate(const ExperimentConfig& cfg) {
  arm::validate(cfg.arm);
  pneumatics::validate(cfg.pneumatics);
  if (cfg.trials_per_variant < 1)
    throw ValidationError("trials_per_variant must be >= 1");
  if (!(cfg.phase_s > 0.0) || !(cfg.dt_s > 0.0))
    throw ValidationError("phase and dt must be positive");
  if (cfg.sigma_pos_cm < 0.0 || cfg.sigma_acc_ms2 < 0.0)
    throw ValidationError("noise sigmas must be non-negative");
  for (const auto& spec : cfg.variants) bellowlab::validate(spec);
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t variant_index,
                         int trial) {
  std::uint64_t x = numerics::splitmix64(base);
  x = numerics::splitmix64(x ^ (0x9e37u + variant_index));
  return numerics::splitmix64(x ^ static_cast<std::uint64_t>(trial));
}

ExperimentResult run_experiment(
    const ExperimentConfig& cfg, const actuator::CellDisplacementTable& table,
    const std::function<void(const ActuatorSpec&, int,
                             const arm::Trajectory&)>& sink) {
  validate(cfg);
  std::vector<ActuatorSpec> variants = cfg.variants;
  if (variants.empty()) {
    auto report = design_space::downselect(design_space::enumerate_candidates(),
                                           design_space::study_constraints());
    variants = report.viable;
  }
  std::sort(variants.begin(), variants.end(), variant_order);

  ExperimentResult result;
  result.variants = variants;
  result.trials.reserve(variants.size() *
                        static_cast<std::size_t>(cfg.trials_per_variant));
  bool noisy = cfg.sigma_pos_cm > 0.0 || cfg.sigma_acc_ms2 > 0.0;
  for (std::size_t vi = 0; vi < variants.size(); ++vi) {
    const auto& spec = variants[vi];
    arm::Trajectory clean = arm::simulate_trial(spec, table, cfg.pneumatics,
                                                cfg.arm, cfg.phase_s,
                                                cfg.dt_s);
    for (int trial = 0; trial < cfg.trials_per_variant; ++trial) {
      arm::Trajectory traj =
          noisy ? arm::add_noise(clean, trial_seed(cfg.seed, vi, trial),
                                 cfg.sigma_pos_cm, cfg.sigma_acc_ms2)
                : clean;
      result.trials.push_back(metrics::trial_metrics(traj, spec, trial));
      if (sink) sink(spec, trial, traj);
    }
  }
  return result;
}

double factor_mean(std::span<const metrics::TrialMetrics> trials,
                   stats::Metric metric, stats::Factor factor,
                   const std::string& group) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& t : trials) {
    if (stats::group_label(factor, t.variant) != group) continue;
    sum += stats::metric_value(t, metric);
    ++count;
  }
  if (count == 0)
    throw ValidationError("factor_mean: no trials in group '" + group + "'");
  return sum / static_cast<double>(count);
}

}  // namespace bellowlab::experiment
