#include "bellowlab/io/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bellowlab/io/csv.hpp"

namespace bellowlab::io {

std::vector<SummaryEntry> read_summary_csv(std::istream& in) {
  auto rows = read_csv(in);
  expect_header(rows, {"shape", "p_cm", "n", "mean", "sd"}, "summary csv");
  std::vector<SummaryEntry> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 5)
      throw ValidationError("summary csv: row " + std::to_string(i) + " has " +
                            std::to_string(r.size()) + " fields, want 5");
    SummaryEntry e;
    e.shape = parse_shape(r[0]);
    e.p_cm = parse_double(r[1], "p_cm");
    e.n = parse_int(r[2], "n");
    e.stat.mean = parse_double(r[3], "mean");
    e.stat.sd = parse_double(r[4], "sd");
    out.push_back(e);
  }
  return out;
}

std::vector<SummaryEntry> read_summary_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open summary csv: " + path);
  return read_summary_csv(in);
}

void write_summary_csv(const std::vector<SummaryEntry>& rows,
                       std::ostream& out) {
  out << "shape,p_cm,n,mean,sd\n";
  for (const auto& e : rows)
    out << shape_name(e.shape) << "," << fmt_g17(e.p_cm) << "," << e.n << ","
        << fmt_g17(e.stat.mean) << "," << fmt_g17(e.stat.sd) << "\n";
}

std::string format_mean_sd(double mean, double sd, bool starred) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f±%.2f", mean, sd);
  std::string s = buf;
  if (starred) s += "*";
  return s;
}

std::string chi_line(const stats::StatResult& r) {
  char buf[96];
  if (r.p_value < 0.001)
    std::snprintf(buf, sizeof buf, "χ²(%d)=%.3f, p<0.001", r.df,
                  r.statistic);
  else
    std::snprintf(buf, sizeof buf, "χ²(%d)=%.3f, p=%.3f", r.df,
                  r.statistic, r.p_value);
  return buf;
}

namespace {

constexpr const char* kFootnote =
    "*Not fully inflated/deflated within the actuation window.";

struct Key {
  double p;
  int n;
  int shape;
  auto operator<=>(const Key&) const = default;
};

Key key_of(CellShape shape, double p, int n) {
  return {p, n, static_cast<int>(shape)};
}

void render_table(const MetricTable& table, std::ostringstream& os) {
  std::map<Key, metrics::Stat> cells;
  std::set<std::pair<double, int>> row_keys;
  for (const auto& e : table.rows) {
    cells[key_of(e.shape, e.p_cm, e.n)] = e.stat;
    row_keys.insert({e.p_cm, e.n});
  }
  std::set<Key> starred;
  for (const auto& s : table.starred)
    starred.insert(key_of(s.shape, s.cell_length_cm, s.n_cells));

  os << "## " << table.title;
  if (!table.unit.empty()) os << " (" << table.unit << ")";
  os << "\n\n";
  os << "| Variant | Square | Rectangle | Circle |\n";
  os << "|---|---|---|---|\n";
  bool any_star = false;
  for (const auto& [p, n] : row_keys) {
    os << "| " << fmt_g17(p) << " cm, " << n << " cells |";
    for (CellShape shape : kAllShapes) {
      Key k = key_of(shape, p, n);
      auto it = cells.find(k);
      if (it == cells.end()) {
        os << " - |";
        continue;
      }
      bool star = starred.count(k) > 0;
      any_star = any_star || star;
      os << " " << format_mean_sd(it->second.mean, it->second.sd, star)
         << " |";
    }
    os << "\n";
  }
  os << "\n";
  if (any_star) os << kFootnote << "\n\n";
}

}  // namespace

std::string render_report(const ReportInput& input) {
  std::ostringstream os;
  os << "# Fabric bellow actuator study\n\n";

  std::size_t total =
      input.selection.viable.size() + input.selection.rejected.size();
  os << "## Candidate screen\n\n";
  os << total << " candidate designs, " << input.selection.viable.size()
     << " viable after screening, " << input.selection.rejected.size()
     << " rejected.\n\n";
  if (!input.selection.viable.empty()) {
    os << "Viable variants: ";
    for (std::size_t i = 0; i < input.selection.viable.size(); ++i)
      os << (i ? ", " : "") << variant_label(input.selection.viable[i]);
    os << "\n\n";
  }
  if (!input.flagged.empty()) {
    os << "Variants that do not settle within the actuation window: ";
    for (std::size_t i = 0; i < input.flagged.size(); ++i)
      os << (i ? ", " : "") << variant_label(input.flagged[i]);
    os << " (starred in the tables below).\n\n";
  }

  for (const auto& table : input.tables) render_table(table, os);

  if (!input.stats.empty()) {
    os << "## Statistics\n\n";
    for (const auto& line : input.stats) {
      os << "- " << line.metric << " by " << line.factor << ": "
         << chi_line(line.result) << "\n";
      for (const auto& pc : line.result.pairwise) {
        if (!pc.significant) continue;
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "  - %s vs %s: z=%.2f, adjusted p=%.4g", pc.group_a.c_str(),
                      pc.group_b.c_str(), pc.z, pc.p_adjusted);
        os << buf << "\n";
      }
    }
    os << "\n";
  }

  for (const auto& note : input.notes) os << "> " << note << "\n";
  return os.str();
}

void write_report_file(const ReportInput& input, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << render_report(input);
}

}  // namespace bellowlab::io
