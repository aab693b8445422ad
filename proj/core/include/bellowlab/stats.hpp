#pragma once

#include <span>
#include <string>
#include <vector>

#include "bellowlab/metrics.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::stats {

struct PairwiseComparison {
  std::string group_a;
  std::string group_b;
  double z = 0.0;
  double p_raw = 1.0;
  double p_adjusted = 1.0;
  bool significant = false;
};

struct StatResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  std::vector<PairwiseComparison> pairwise;
  std::string annotation;
};

/// Mid-ranks of the pooled sample, ties sharing their average rank.
std::vector<double> midranks(std::span<const double> values);

/// One-sample Kolmogorov-Smirnov test of values against a normal with the
/// sample's own mean and SD. statistic is D; p is the asymptotic
/// Kolmogorov tail at sqrt(n) * D. Estimating the parameters from the
/// sample makes the p conservative; it is reported as-is and annotated.
StatResult ks_normality(std::span<const double> values);

/// Kruskal-Wallis H with mid-ranks and the tie correction
/// 1 - sum(t^3 - t) / (N^3 - N); p from the chi-square tail with k - 1
/// degrees of freedom. Needs k >= 2 non-empty groups. When every pooled
/// value is identical the statistic is 0 and p is 1.
StatResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

/// Dunn's z for every unordered pair, on the pooled mid-ranks with the
/// tie term sum(t^3 - t) / (12 (N - 1)) removed from the variance.
/// p_raw is the two-sided normal tail, p_adjusted the Bonferroni value
/// min(1, p_raw * k(k-1)/2), significance judged at alpha on p_adjusted.
std::vector<PairwiseComparison> dunn_posthoc(
    const std::vector<std::vector<double>>& groups,
    const std::vector<std::string>& labels, double alpha = 0.05);

enum class Factor { Shape, Size, CellCount };
enum class Metric { Path, SI, Jerk, Angle };
enum class Pooling { PooledTrials, VariantMeans };

std::string factor_name(Factor f);
std::string metric_name(Metric m);

/// Group label of a variant under a factor: shape name, "3cm"/"4cm", or
/// "8-cell"/"10-cell"/"12-cell". Throws ValidationError for variants
/// outside the study grid (p not in {3,4} or n not in {8,10,12}).
std::string group_label(Factor f, const ActuatorSpec& spec);

double metric_value(const metrics::TrialMetrics& t, Metric m);

/// Omnibus Kruskal-Wallis across the factor's groups plus unconditional
/// Dunn pairwise comparisons (annotation records the omnibus p so the
/// reader can weigh them). PooledTrials ranks every trial; VariantMeans
/// first collapses each variant to its trial mean.
StatResult compare_by_factor(std::span<const metrics::TrialMetrics> records,
                             Metric metric, Factor factor,
                             Pooling pooling = Pooling::PooledTrials,
                             double alpha = 0.05);

}  // namespace bellowlab::stats
