#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bellowlab/design_space.hpp"
#include "bellowlab/metrics.hpp"
#include "bellowlab/stats.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::io {

struct SummaryEntry {
  CellShape shape;
  double p_cm = 0.0;
  int n = 0;
  metrics::Stat stat;
};

/// Schema: shape,p_cm,n,mean,sd. Used for the committed bench-results
/// fixtures and for round-tripping computed summaries.
std::vector<SummaryEntry> read_summary_csv(std::istream& in);
std::vector<SummaryEntry> read_summary_csv_file(const std::string& path);
void write_summary_csv(const std::vector<SummaryEntry>& rows,
                       std::ostream& out);

/// "13.65±0.76", or "16.62±1.29*" when starred. Two decimals.
std::string format_mean_sd(double mean, double sd, bool starred);

/// "χ²(2)=24.728, p<0.001"; p printed as "p<0.001" below that threshold,
/// otherwise "p=0.369" style with three decimals.
std::string chi_line(const stats::StatResult& r);

struct MetricTable {
  std::string title;            // e.g. "Path length"
  std::string unit;             // e.g. "cm"
  std::vector<SummaryEntry> rows;
  std::vector<ActuatorSpec> starred;  // variants rendered with '*'
};

struct StatLine {
  std::string metric;
  std::string factor;
  stats::StatResult result;
};

struct ReportInput {
  design_space::SelectionReport selection;
  std::vector<MetricTable> tables;
  std::vector<StatLine> stats;
  std::vector<ActuatorSpec> flagged;  // incomplete-actuation variants
  std::vector<std::string> notes;
};

/// Markdown report: candidate screen summary, one 6x3 table per metric
/// (rows 3cm/4cm x 8/10/12 cells, columns shapes, cells mean±SD with '*'
/// on flagged variants and a footnote), then the statistics lines.
std::string render_report(const ReportInput& input);
void write_report_file(const ReportInput& input, const std::string& path);

}  // namespace bellowlab::io
