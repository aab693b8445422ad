#include "bellowlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bellowlab/actuator.hpp"
#include "bellowlab/arm.hpp"
#include "bellowlab/design_space.hpp"
#include "bellowlab/experiment.hpp"
#include "bellowlab/io/config.hpp"
#include "bellowlab/io/csv.hpp"
#include "bellowlab/io/pattern.hpp"
#include "bellowlab/io/plots.hpp"
#include "bellowlab/io/report.hpp"
#include "bellowlab/metrics.hpp"
#include "bellowlab/pneumatics.hpp"
#include "bellowlab/stats.hpp"
#include "bellowlab/types.hpp"

namespace fs = std::filesystem;

namespace bellowlab::cli {

namespace {

struct CommonOpts {
  std::string out_dir;
  std::string table_file;
  std::string pneu_file;
  std::uint64_t seed = 1;
};

std::string default_out_dir() {
  if (const char* env = std::getenv("BELLOWLAB_OUT"); env && *env)
    return env;
  return ".";
}

fs::path ensure_out_dir(const std::string& dir) {
  fs::path p = dir.empty() ? fs::path(default_out_dir()) : fs::path(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec && !fs::is_directory(p))
    throw ValidationError("cannot create output directory: " + p.string());
  return p;
}

actuator::CellDisplacementTable load_table(const CommonOpts& opts) {
  if (opts.table_file.empty())
    return actuator::CellDisplacementTable::builtin();
  return actuator::CellDisplacementTable::from_csv_file(opts.table_file);
}

pneumatics::PneumaticConfig load_pneu(const CommonOpts& opts) {
  if (opts.pneu_file.empty()) return pneumatics::shipped_defaults();
  return io::load_pneumatic_config_file(opts.pneu_file);
}

ActuatorSpec parse_variant(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  if (parts.size() != 3)
    throw ValidationError("variant must be shape,p_cm,n (got '" + text +
                          "')");
  ActuatorSpec spec;
  spec.shape = parse_shape(parts[0]);
  spec.cell_length_cm = io::parse_double(parts[1], "p_cm");
  spec.n_cells = io::parse_int(parts[2], "n");
  validate(spec);
  return spec;
}

std::vector<ActuatorSpec> resolve_variants(
    const std::vector<std::string>& variant_args) {
  if (variant_args.empty()) {
    auto report = design_space::downselect(
        design_space::enumerate_candidates(),
        design_space::study_constraints());
    return report.viable;
  }
  std::vector<ActuatorSpec> out;
  out.reserve(variant_args.size());
  for (const auto& v : variant_args) out.push_back(parse_variant(v));
  return out;
}

void print_plain_rows(const std::vector<ActuatorSpec>& specs,
                      std::ostream& os) {
  for (const auto& s : specs)
    os << shape_name(s.shape) << "," << io::fmt_g17(s.cell_length_cm) << ","
       << s.n_cells << "\n";
}

std::vector<ActuatorSpec> flagged_variants(
    const std::vector<ActuatorSpec>& variants,
    const actuator::CellDisplacementTable& table,
    const pneumatics::PneumaticConfig& pneu) {
  std::vector<ActuatorSpec> flagged;
  for (const auto& spec : variants)
    if (pneumatics::classify_completion(spec, table, pneu) ==
        pneumatics::Completion::Incomplete)
      flagged.push_back(spec);
  return flagged;
}

int cmd_enumerate(const std::string& out_dir) {
  auto specs = design_space::enumerate_candidates();
  print_plain_rows(specs, std::cout);
  if (!out_dir.empty()) {
    fs::path dir = ensure_out_dir(out_dir);
    std::ostringstream os;
    os << "shape,p_cm,n\n";
    std::ostringstream body;
    print_plain_rows(specs, body);
    io::write_file((dir / "candidates.csv").string(),
                   os.str() + body.str());
  }
  return 0;
}

int cmd_downselect(const std::string& out_dir) {
  auto report = design_space::downselect(design_space::enumerate_candidates(),
                                         design_space::study_constraints());
  print_plain_rows(report.viable, std::cout);
  if (!out_dir.empty()) {
    fs::path dir = ensure_out_dir(out_dir);
    std::ostringstream os;
    design_space::write_selection_csv(report, os);
    io::write_file((dir / "selection.csv").string(), os.str());
  }
  return 0;
}

int cmd_simulate(const CommonOpts& opts,
                 const std::vector<std::string>& variant_args, int trials,
                 double phase_s, double rate_hz, double sigma_pos,
                 double sigma_acc) {
  auto table = load_table(opts);
  auto pneu = load_pneu(opts);
  fs::path dir = ensure_out_dir(opts.out_dir);

  experiment::ExperimentConfig cfg;
  cfg.variants = resolve_variants(variant_args);
  cfg.pneumatics = pneu;
  cfg.trials_per_variant = trials;
  cfg.phase_s = phase_s;
  cfg.dt_s = 1.0 / rate_hz;
  cfg.seed = opts.seed;
  cfg.sigma_pos_cm = sigma_pos;
  cfg.sigma_acc_ms2 = sigma_acc;

  std::vector<io::LabeledSeries> pressures;
  std::vector<io::LabeledPath> paths;
  auto sink = [&dir, &paths](const ActuatorSpec& spec, int trial,
                             const arm::Trajectory& traj) {
    std::ostringstream name;
    name << "traj_" << variant_label(spec) << "_trial" << trial << ".csv";
    std::ostringstream body;
    io::write_trajectory_csv(traj, body);
    io::write_file((dir / name.str()).string(), body.str());
    if (trial == 0)
      paths.push_back({variant_label(spec), traj.wrist});
  };
  auto result = experiment::run_experiment(cfg, table, sink);

  for (const auto& spec : result.variants) {
    auto series = pneumatics::pressure_profile(
        spec, table, pneu, pneumatics::Phase::Inflate, phase_s,
        1.0 / rate_hz);
    std::ostringstream body;
    io::write_pressure_csv(series, body);
    io::write_file(
        (dir / ("pressure_" + variant_label(spec) + ".csv")).string(),
        body.str());
    pressures.push_back({variant_label(spec), series.t_s, series.p_kPa});
  }

  std::ostringstream metrics_body;
  io::write_metrics_csv(result.trials, metrics_body);
  io::write_file((dir / "metrics.csv").string(), metrics_body.str());

  std::ostringstream pplot;
  io::write_line_plot_svg(pressures, "t (s)", "p (kPa)", pplot);
  io::write_file((dir / "pressure.svg").string(), pplot.str());
  std::ostringstream wplot;
  io::write_path_plot_svg(paths, wplot);
  io::write_file((dir / "paths.svg").string(), wplot.str());

  std::cout << "simulated " << result.variants.size() << " variants x "
            << trials << " trials -> " << dir.string() << "\n";
  return 0;
}

// Trajectory files are matched by the simulate naming scheme:
// traj_<shape>-<p>-<n>_trial<k>.csv
std::optional<std::pair<ActuatorSpec, int>> parse_traj_name(
    const std::string& stem) {
  if (stem.rfind("traj_", 0) != 0) return std::nullopt;
  std::size_t trial_pos = stem.rfind("_trial");
  if (trial_pos == std::string::npos) return std::nullopt;
  std::string label = stem.substr(5, trial_pos - 5);
  std::string trial_str = stem.substr(trial_pos + 6);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t dash = label.find('-', start);
    if (dash == std::string::npos) {
      parts.push_back(label.substr(start));
      break;
    }
    parts.push_back(label.substr(start, dash - start));
    start = dash + 1;
  }
  if (parts.size() != 3) return std::nullopt;
  try {
    ActuatorSpec spec;
    spec.shape = parse_shape(parts[0]);
    spec.cell_length_cm = io::parse_double(parts[1], "p_cm");
    spec.n_cells = io::parse_int(parts[2], "n");
    int trial = io::parse_int(trial_str, "trial");
    return std::make_pair(spec, trial);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

int cmd_metrics(const CommonOpts& opts, const std::string& in_dir,
                const std::string& imu_file) {
  fs::path dir = ensure_out_dir(opts.out_dir);
  if (!imu_file.empty()) {
    std::ifstream in(imu_file);
    if (!in) throw ValidationError("cannot open imu csv: " + imu_file);
    auto series = io::read_imu_csv(in);
    if (series.t_s.size() < 2)
      throw ValidationError("imu csv: need at least two samples");
    double rate = 1.0 / (series.t_s[1] - series.t_s[0]);
    std::cout << "mean_abs_jerk_ms3,"
              << io::fmt_g17(metrics::mean_abs_jerk(series.accel_ms2, rate))
              << "\n";
    return 0;
  }
  if (in_dir.empty())
    throw ValidationError("metrics: provide --in DIR or --imu FILE");
  if (!fs::is_directory(in_dir))
    throw ValidationError("metrics: not a directory: " + in_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<metrics::TrialMetrics> all;
  for (const auto& file : files) {
    auto id = parse_traj_name(file.stem().string());
    if (!id) continue;
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open " + file.string());
    arm::Trajectory traj = io::read_trajectory_csv(in);
    all.push_back(metrics::trial_metrics(traj, id->first, id->second));
  }
  if (all.empty())
    throw ValidationError("metrics: no traj_*_trial*.csv files in " + in_dir);
  std::sort(all.begin(), all.end(),
            [](const metrics::TrialMetrics& a, const metrics::TrialMetrics& b) {
              if (variant_order(a.variant, b.variant)) return true;
              if (variant_order(b.variant, a.variant)) return false;
              return a.trial < b.trial;
            });
  std::ostringstream body;
  io::write_metrics_csv(all, body);
  io::write_file((dir / "metrics.csv").string(), body.str());
  std::cout << "wrote metrics for " << all.size() << " trials -> "
            << (dir / "metrics.csv").string() << "\n";
  return 0;
}

const stats::Metric kMetrics[] = {stats::Metric::Path, stats::Metric::SI,
                                  stats::Metric::Jerk, stats::Metric::Angle};
const stats::Factor kFactors[] = {stats::Factor::Shape, stats::Factor::Size,
                                  stats::Factor::CellCount};

std::vector<io::StatLine> all_stat_lines(
    std::span<const metrics::TrialMetrics> records, stats::Pooling pooling,
    double alpha) {
  std::vector<io::StatLine> lines;
  for (auto metric : kMetrics)
    for (auto factor : kFactors)
      lines.push_back({stats::metric_name(metric), stats::factor_name(factor),
                       stats::compare_by_factor(records, metric, factor,
                                                pooling, alpha)});
  return lines;
}

int cmd_stats(const std::string& metrics_file, const std::string& metric_arg,
              const std::string& factor_arg, const std::string& pooling_arg,
              double alpha) {
  std::ifstream in(metrics_file);
  if (!in) throw ValidationError("cannot open metrics csv: " + metrics_file);
  auto records = io::read_metrics_csv(in);

  stats::Pooling pooling = stats::Pooling::PooledTrials;
  if (pooling_arg == "means")
    pooling = stats::Pooling::VariantMeans;
  else if (pooling_arg != "trials")
    throw ValidationError("pooling must be 'trials' or 'means'");

  std::vector<stats::Metric> metrics_sel;
  std::vector<stats::Factor> factors_sel;
  if (metric_arg == "all") {
    metrics_sel.assign(std::begin(kMetrics), std::end(kMetrics));
  } else {
    std::map<std::string, stats::Metric> m{{"path", stats::Metric::Path},
                                           {"si", stats::Metric::SI},
                                           {"jerk", stats::Metric::Jerk},
                                           {"angle", stats::Metric::Angle}};
    auto it = m.find(metric_arg);
    if (it == m.end())
      throw ValidationError("unknown metric '" + metric_arg + "'");
    metrics_sel.push_back(it->second);
  }
  if (factor_arg == "all") {
    factors_sel.assign(std::begin(kFactors), std::end(kFactors));
  } else {
    std::map<std::string, stats::Factor> f{
        {"shape", stats::Factor::Shape},
        {"size", stats::Factor::Size},
        {"cells", stats::Factor::CellCount}};
    auto it = f.find(factor_arg);
    if (it == f.end())
      throw ValidationError("unknown factor '" + factor_arg + "'");
    factors_sel.push_back(it->second);
  }

  for (auto metric : metrics_sel) {
    for (auto factor : factors_sel) {
      auto r = stats::compare_by_factor(records, metric, factor, pooling,
                                        alpha);
      std::cout << stats::metric_name(metric) << " by "
                << stats::factor_name(factor) << ": " << io::chi_line(r)
                << "\n";
      for (const auto& pc : r.pairwise) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "  %s vs %s: z=%.3f, p=%.4g, adjusted p=%.4g%s",
                      pc.group_a.c_str(), pc.group_b.c_str(), pc.z, pc.p_raw,
                      pc.p_adjusted, pc.significant ? " (significant)" : "");
        std::cout << buf << "\n";
      }
    }
  }
  return 0;
}

io::MetricTable table_from_summary(const std::string& title,
                                   const std::string& unit,
                                   std::vector<io::SummaryEntry> rows,
                                   const std::vector<ActuatorSpec>& starred) {
  io::MetricTable t;
  t.title = title;
  t.unit = unit;
  t.rows = std::move(rows);
  t.starred = starred;
  return t;
}

std::vector<io::SummaryEntry> summary_entries(
    const std::vector<metrics::SummaryRow>& rows,
    metrics::Stat metrics::SummaryRow::*field) {
  std::vector<io::SummaryEntry> out;
  out.reserve(rows.size());
  for (const auto& r : rows)
    out.push_back({r.variant.shape, r.variant.cell_length_cm,
                   r.variant.n_cells, r.*field});
  return out;
}

int cmd_report(const CommonOpts& opts, int trials, double sigma_pos,
               double sigma_acc, const std::string& path_fixture,
               const std::string& si_fixture,
               const std::string& jerk_fixture) {
  auto table = load_table(opts);
  auto pneu = load_pneu(opts);
  fs::path dir = ensure_out_dir(opts.out_dir);

  auto selection = design_space::downselect(
      design_space::enumerate_candidates(), design_space::study_constraints());
  auto flagged = flagged_variants(selection.viable, table, pneu);

  io::ReportInput input;
  input.selection = selection;
  input.flagged = flagged;

  bool fixture_mode = !path_fixture.empty() || !si_fixture.empty() ||
                      !jerk_fixture.empty();
  if (fixture_mode) {
    if (path_fixture.empty() || si_fixture.empty() || jerk_fixture.empty())
      throw ValidationError(
          "fixture mode needs --path-table, --si-table and --jerk-table");
    input.tables.push_back(table_from_summary(
        "Path length", "cm", io::read_summary_csv_file(path_fixture),
        flagged));
    input.tables.push_back(table_from_summary(
        "Straightness index", "", io::read_summary_csv_file(si_fixture),
        flagged));
    input.tables.push_back(table_from_summary(
        "Mean absolute jerk", "m/s^3", io::read_summary_csv_file(jerk_fixture),
        flagged));
    input.notes.push_back(
        "Tables loaded from bench summary fixtures; no trial-level "
        "statistics available.");
  } else {
    experiment::ExperimentConfig cfg;
    cfg.pneumatics = pneu;
    cfg.trials_per_variant = trials;
    cfg.seed = opts.seed;
    cfg.sigma_pos_cm = sigma_pos;
    cfg.sigma_acc_ms2 = sigma_acc;
    auto result = experiment::run_experiment(cfg, table);
    auto rows = metrics::summarize(result.trials);
    input.tables.push_back(table_from_summary(
        "Path length", "cm",
        summary_entries(rows, &metrics::SummaryRow::path_cm), flagged));
    input.tables.push_back(table_from_summary(
        "Straightness index", "",
        summary_entries(rows, &metrics::SummaryRow::si), flagged));
    input.tables.push_back(table_from_summary(
        "Mean absolute jerk", "m/s^3",
        summary_entries(rows, &metrics::SummaryRow::jerk_ms3), flagged));
    input.tables.push_back(table_from_summary(
        "Elbow flexion range", "deg",
        summary_entries(rows, &metrics::SummaryRow::angle_deg), flagged));
    input.stats =
        all_stat_lines(result.trials, stats::Pooling::PooledTrials, 0.05);
    if (sigma_pos == 0.0 && sigma_acc == 0.0)
      input.notes.push_back(
          "Noise-free run: trials within a variant are identical, so the "
          "rank tests compare variant-level values repeated per trial.");
    input.notes.push_back(
        "Jerk aggregated as the mean absolute derivative of acceleration "
        "magnitude.");
  }

  io::write_report_file(input, (dir / "report.md").string());
  std::cout << "wrote " << (dir / "report.md").string() << "\n";
  return 0;
}

int cmd_pattern(const CommonOpts& opts,
                const std::vector<std::string>& variant_args, double seam) {
  if (variant_args.empty())
    throw ValidationError("pattern: provide at least one --variant");
  fs::path dir = ensure_out_dir(opts.out_dir);
  for (const auto& arg : variant_args) {
    ActuatorSpec spec = parse_variant(arg);
    auto layout = io::layout_pattern(spec, seam);
    std::string name = "pattern_" + variant_label(spec) + ".svg";
    io::write_pattern_svg_file(layout, (dir / name).string());
    std::cout << name << ": panel " << io::fmt_g17(layout.panel_w) << " x "
              << io::fmt_g17(layout.panel_h) << " cm\n";
  }
  return 0;
}

int cmd_calibrate(const CommonOpts& opts, bool equal_resistance,
                  const std::string& save_path) {
  auto table = load_table(opts);
  auto selection = design_space::downselect(
      design_space::enumerate_candidates(), design_space::study_constraints());
  auto pneu = load_pneu(opts);
  std::vector<ActuatorSpec> must_flag = flagged_variants(selection.viable,
                                                         table, pneu);
  std::vector<ActuatorSpec> must_pass;
  for (const auto& spec : selection.viable)
    if (std::find(must_flag.begin(), must_flag.end(), spec) ==
        must_flag.end())
      must_pass.push_back(spec);

  if (equal_resistance) {
    // Shape-blind model: one shared resistance, so tau depends on volume
    // only. Sweep the flow axis finely and report whether any flow value
    // reproduces the target split.
    pneumatics::CalibrationGrid grid;
    grid.circle_factors = {1.0};
    grid.rectangle_factors = {1.0};
    for (double q = 20.0; q <= 400.0 + 1e-9; q += 0.5)
      grid.supply_flows.push_back(q);
    try {
      auto cfg = pneumatics::calibrate_resistances(table, must_flag,
                                                   must_pass, grid);
      std::cout << "equal-resistance model feasible at supply flow "
                << io::fmt_g17(cfg.supply_flow_cm3_s) << " cm^3/s\n";
    } catch (const pneumatics::CalibrationError& e) {
      std::cout << "equal-resistance model infeasible over flows 20..400 "
                   "cm^3/s (step 0.5): "
                << e.what() << "\n";
      for (const auto& v : e.violations()) std::cout << "  " << v << "\n";
    }
    return 0;
  }

  auto cfg = pneumatics::calibrate_resistances(table, must_flag, must_pass);
  std::ostringstream os;
  io::save_pneumatic_config(cfg, os);
  std::cout << os.str();
  if (!save_path.empty()) io::write_file(save_path, os.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"fabric bellow actuator design and evaluation toolkit",
               "bellowlab"};
  app.require_subcommand(1);

  CommonOpts common;

  auto add_common = [&common](CLI::App* sub, bool with_seed = true) {
    sub->add_option("--out", common.out_dir, "output directory");
    sub->add_option("--table", common.table_file,
                    "cell displacement table CSV");
    sub->add_option("--pneumatics", common.pneu_file,
                    "pneumatic config file");
    if (with_seed)
      sub->add_option("--seed", common.seed, "random seed");
  };

  auto* enumerate = app.add_subcommand(
      "enumerate", "print the full 72-point candidate grid");
  std::string enum_out;
  enumerate->add_option("--out", enum_out, "also write candidates.csv here");

  auto* downselect = app.add_subcommand(
      "downselect", "apply the study constraints, print viable variants");
  std::string down_out;
  downselect->add_option("--out", down_out, "also write selection.csv here");

  auto* simulate = app.add_subcommand(
      "simulate", "simulate actuation trials and write trajectories");
  std::vector<std::string> sim_variants;
  int sim_trials = 10;
  double sim_phase = 5.0, sim_rate = 60.0, sim_noise_pos = 0.0,
         sim_noise_acc = 0.0;
  simulate->add_option("--variant", sim_variants,
                       "shape,p_cm,n (repeatable; default: all viable)");
  simulate->add_option("--trials", sim_trials, "trials per variant");
  simulate->add_option("--phase", sim_phase, "inflate/deflate phase (s)");
  simulate->add_option("--rate", sim_rate, "sample rate (Hz)");
  simulate->add_option("--noise-pos", sim_noise_pos,
                       "marker noise SD (cm)");
  simulate->add_option("--noise-acc", sim_noise_acc,
                       "acceleration noise SD (m/s^2)");
  add_common(simulate);

  auto* metrics_cmd = app.add_subcommand(
      "metrics", "compute trial metrics from trajectory CSVs");
  std::string metrics_in, metrics_imu;
  metrics_cmd->add_option("--in", metrics_in,
                          "directory of traj_*_trial*.csv files");
  metrics_cmd->add_option("--imu", metrics_imu,
                          "IMU CSV; prints mean absolute jerk only");
  metrics_cmd->add_option("--out", common.out_dir, "output directory");

  auto* stats_cmd = app.add_subcommand(
      "stats", "rank-based group comparisons over a metrics CSV");
  std::string stats_file, stats_metric = "all", stats_factor = "all",
              stats_pooling = "trials";
  double stats_alpha = 0.05;
  stats_cmd->add_option("--metrics", stats_file, "metrics CSV path")
      ->required();
  stats_cmd->add_option("--metric", stats_metric,
                        "path|si|jerk|angle|all");
  stats_cmd->add_option("--factor", stats_factor, "shape|size|cells|all");
  stats_cmd->add_option("--pooling", stats_pooling, "trials|means");
  stats_cmd->add_option("--alpha", stats_alpha, "significance level");

  auto* report = app.add_subcommand(
      "report", "emit the markdown study report");
  int rep_trials = 10;
  double rep_noise_pos = 0.0, rep_noise_acc = 0.0;
  std::string rep_path_fix, rep_si_fix, rep_jerk_fix;
  report->add_option("--trials", rep_trials, "trials per variant");
  report->add_option("--noise-pos", rep_noise_pos, "marker noise SD (cm)");
  report->add_option("--noise-acc", rep_noise_acc,
                     "acceleration noise SD (m/s^2)");
  report->add_option("--path-table", rep_path_fix,
                     "path-length summary fixture CSV");
  report->add_option("--si-table", rep_si_fix,
                     "straightness summary fixture CSV");
  report->add_option("--jerk-table", rep_jerk_fix,
                     "jerk summary fixture CSV");
  add_common(report);

  auto* pattern = app.add_subcommand(
      "pattern", "emit the cut-and-seal SVG for a variant");
  std::vector<std::string> pat_variants;
  double pat_seam = actuator::kDefaultSeamMargin;
  pattern->add_option("--variant", pat_variants, "shape,p_cm,n (repeatable)");
  pattern->add_option("--seam", pat_seam, "seam margin (cm)");
  add_common(pattern, false);

  auto* calibrate = app.add_subcommand(
      "calibrate", "search resistance factors reproducing the target split");
  bool cal_equal = false;
  std::string cal_save;
  calibrate->add_flag("--equal-resistance", cal_equal,
                      "test the shape-blind (volume-only) model instead");
  calibrate->add_option("--save", cal_save, "write the result config here");
  add_common(calibrate, false);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bellowlab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(enum_out);
    if (downselect->parsed()) return cmd_downselect(down_out);
    if (simulate->parsed())
      return cmd_simulate(common, sim_variants, sim_trials, sim_phase,
                          sim_rate, sim_noise_pos, sim_noise_acc);
    if (metrics_cmd->parsed())
      return cmd_metrics(common, metrics_in, metrics_imu);
    if (stats_cmd->parsed())
      return cmd_stats(stats_file, stats_metric, stats_factor, stats_pooling,
                       stats_alpha);
    if (report->parsed())
      return cmd_report(common, rep_trials, rep_noise_pos, rep_noise_acc,
                        rep_path_fix, rep_si_fix, rep_jerk_fix);
    if (pattern->parsed()) return cmd_pattern(common, pat_variants, pat_seam);
    if (calibrate->parsed())
      return cmd_calibrate(common, cal_equal, cal_save);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace bellowlab::cli
