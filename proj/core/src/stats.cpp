#include "bellowlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "bellowlab/numerics.hpp"

namespace bellowlab::stats {

namespace {

// Tie bookkeeping shared by kruskal_wallis and dunn_posthoc: sum of
// (t^3 - t) over tie groups of the pooled sample.
double tie_term(std::span<const double> pooled) {
  std::vector<double> sorted(pooled.begin(), pooled.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    auto t = static_cast<double>(j - i);
    sum += t * t * t - t;
    i = j;
  }
  return sum;
}

struct RankedGroups {
  std::vector<std::vector<double>> ranks;  // per group
  double n_total = 0.0;
  double ties = 0.0;  // sum(t^3 - t)
};

RankedGroups rank_groups(const std::vector<std::vector<double>>& groups) {
  std::vector<double> pooled;
  for (const auto& g : groups) {
    if (g.empty()) throw ValidationError("rank test: empty group");
    pooled.insert(pooled.end(), g.begin(), g.end());
  }
  if (groups.size() < 2)
    throw ValidationError("rank test: need at least two groups");
  std::vector<double> pooled_ranks = midranks(pooled);
  RankedGroups out;
  out.n_total = static_cast<double>(pooled.size());
  out.ties = tie_term(pooled);
  out.ranks.resize(groups.size());
  std::size_t idx = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (std::size_t k = 0; k < groups[gi].size(); ++k)
      out.ranks[gi].push_back(pooled_ranks[idx++]);
  return out;
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
  std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // 1-based ranks i+1 .. j averaged over the tie run
    double avg = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg;
    i = j;
  }
  return ranks;
}

StatResult ks_normality(std::span<const double> values) {
  if (values.size() < 3)
    throw ValidationError("ks_normality: need at least three samples");
  metrics::Stat s = metrics::mean_sd(values);
  if (!(s.sd > 0.0))
    throw ValidationError("ks_normality: zero-variance sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    double cdf = numerics::normal_cdf((sorted[i] - s.mean) / s.sd);
    double lo = static_cast<double>(i) / n;
    double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(std::fabs(cdf - lo), std::fabs(hi - cdf)));
  }
  StatResult r;
  r.statistic = d;
  r.df = 0;
  r.p_value = numerics::kolmogorov_q(std::sqrt(n) * d);
  r.annotation =
      "asymptotic Kolmogorov tail; reference normal fitted from the sample, "
      "which makes the p-value conservative";
  return r;
}

StatResult kruskal_wallis(const std::vector<std::vector<double>>& groups) {
  RankedGroups rg = rank_groups(groups);
  double n = rg.n_total;
  double h = 0.0;
  for (const auto& ranks : rg.ranks) {
    double sum = std::accumulate(ranks.begin(), ranks.end(), 0.0);
    h += sum * sum / static_cast<double>(ranks.size());
  }
  h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);
  double correction = 1.0 - rg.ties / (n * n * n - n);
  StatResult r;
  r.df = static_cast<int>(groups.size()) - 1;
  if (correction <= 0.0) {
    // Every pooled value identical: no evidence of any difference.
    r.statistic = 0.0;
    r.p_value = 1.0;
    r.annotation = "all pooled values identical";
    return r;
  }
  h /= correction;
  // Guard tiny negative fp residue when all group means coincide.
  if (h < 0.0 && h > -1e-12) h = 0.0;
  r.statistic = h;
  r.p_value = numerics::chi_square_sf(h, r.df);
  return r;
}

std::vector<PairwiseComparison> dunn_posthoc(
    const std::vector<std::vector<double>>& groups,
    const std::vector<std::string>& labels, double alpha) {
  if (labels.size() != groups.size())
    throw ValidationError("dunn_posthoc: one label per group required");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("dunn_posthoc: alpha must be in (0, 1)");
  RankedGroups rg = rank_groups(groups);
  double n = rg.n_total;
  std::size_t k = groups.size();
  double m = static_cast<double>(k * (k - 1)) / 2.0;
  double var_base = n * (n + 1.0) / 12.0 - rg.ties / (12.0 * (n - 1.0));

  std::vector<double> mean_rank(k);
  for (std::size_t i = 0; i < k; ++i)
    mean_rank[i] =
        std::accumulate(rg.ranks[i].begin(), rg.ranks[i].end(), 0.0) /
        static_cast<double>(rg.ranks[i].size());

  std::vector<PairwiseComparison> out;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      double ni = static_cast<double>(groups[i].size());
      double nj = static_cast<double>(groups[j].size());
      double se = std::sqrt(var_base * (1.0 / ni + 1.0 / nj));
      PairwiseComparison c;
      c.group_a = labels[i];
      c.group_b = labels[j];
      if (se > 0.0) {
        c.z = (mean_rank[i] - mean_rank[j]) / se;
        c.p_raw = 2.0 * numerics::normal_sf(std::fabs(c.z));
      } else {
        c.z = 0.0;
        c.p_raw = 1.0;
      }
      c.p_adjusted = std::min(1.0, c.p_raw * m);
      c.significant = c.p_adjusted < alpha;
      out.push_back(c);
    }
  }
  return out;
}

std::string factor_name(Factor f) {
  switch (f) {
    case Factor::Shape: return "shape";
    case Factor::Size: return "size";
    case Factor::CellCount: return "cells";
  }
  throw std::logic_error("factor_name: bad enum value");
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::Path: return "path";
    case Metric::SI: return "si";
    case Metric::Jerk: return "jerk";
    case Metric::Angle: return "angle";
  }
  throw std::logic_error("metric_name: bad enum value");
}

std::string group_label(Factor f, const ActuatorSpec& spec) {
  switch (f) {
    case Factor::Shape:
      return shape_name(spec.shape);
    case Factor::Size: {
      if (spec.cell_length_cm != 3.0 && spec.cell_length_cm != 4.0)
        throw ValidationError("size factor: cell length " +
                              std::to_string(spec.cell_length_cm) +
                              " is outside the study grid");
      return spec.cell_length_cm == 3.0 ? "3cm" : "4cm";
    }
    case Factor::CellCount: {
      if (spec.n_cells != 8 && spec.n_cells != 10 && spec.n_cells != 12)
        throw ValidationError("cell-count factor: n=" +
                              std::to_string(spec.n_cells) +
                              " is outside the study grid");
      return std::to_string(spec.n_cells) + "-cell";
    }
  }
  throw std::logic_error("group_label: bad enum value");
}

double metric_value(const metrics::TrialMetrics& t, Metric m) {
  switch (m) {
    case Metric::Path: return t.path_cm;
    case Metric::SI: return t.si;
    case Metric::Jerk: return t.jerk_ms3;
    case Metric::Angle: return t.angle_deg;
  }
  throw std::logic_error("metric_value: bad enum value");
}

namespace {

std::vector<std::string> factor_levels(Factor f) {
  switch (f) {
    case Factor::Shape: return {"square", "rectangle", "circle"};
    case Factor::Size: return {"3cm", "4cm"};
    case Factor::CellCount: return {"8-cell", "10-cell", "12-cell"};
  }
  throw std::logic_error("factor_levels: bad enum value");
}

}  // namespace

StatResult compare_by_factor(std::span<const metrics::TrialMetrics> records,
                             Metric metric, Factor factor, Pooling pooling,
                             double alpha) {
  if (records.empty())
    throw ValidationError("compare_by_factor: no records");
  std::vector<std::string> levels = factor_levels(factor);
  std::map<std::string, std::vector<double>> by_level;

  if (pooling == Pooling::PooledTrials) {
    for (const auto& t : records)
      by_level[group_label(factor, t.variant)].push_back(
          metric_value(t, metric));
  } else {
    // Collapse each variant to its trial mean first.
    std::map<std::tuple<double, int, int>,
             std::pair<ActuatorSpec, std::vector<double>>>
        per_variant;
    for (const auto& t : records) {
      auto key = std::tuple(t.variant.cell_length_cm, t.variant.n_cells,
                            static_cast<int>(t.variant.shape));
      auto& slot = per_variant[key];
      slot.first = t.variant;
      slot.second.push_back(metric_value(t, metric));
    }
    for (const auto& [key, slot] : per_variant)
      by_level[group_label(factor, slot.first)].push_back(
          metrics::mean_sd(slot.second).mean);
  }

  std::vector<std::vector<double>> groups;
  std::vector<std::string> labels;
  for (const auto& level : levels) {
    auto it = by_level.find(level);
    if (it == by_level.end())
      throw ValidationError("compare_by_factor: no records in group '" +
                            level + "'");
    groups.push_back(it->second);
    labels.push_back(level);
  }

  StatResult r = kruskal_wallis(groups);
  r.pairwise = dunn_posthoc(groups, labels, alpha);
  std::ostringstream os;
  os << "factor=" << factor_name(factor) << " metric=" << metric_name(metric)
     << "; pairwise comparisons run unconditionally, omnibus p="
     << r.p_value;
  if (!r.annotation.empty()) os << "; " << r.annotation;
  r.annotation = os.str();
  return r;
}

}  // namespace bellowlab::stats
