#include "bellowlab/io/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bellowlab::io {

std::string fmt_g17(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

void expect_header(const std::vector<std::vector<std::string>>& rows,
                   const std::vector<std::string>& expected,
                   const std::string& what) {
  if (rows.empty())
    throw ValidationError(what + ": empty file");
  if (rows[0] != expected) {
    std::ostringstream os;
    os << what << ": bad header, expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      os << (i ? "," : "") << expected[i];
    throw ValidationError(os.str());
  }
}

double parse_double(const std::string& field, const std::string& name) {
  char* end = nullptr;
  double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || !std::isfinite(v))
    throw ValidationError("bad numeric field " + name + ": '" + field + "'");
  return v;
}

int parse_int(const std::string& field, const std::string& name) {
  char* end = nullptr;
  long v = std::strtol(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0')
    throw ValidationError("bad integer field " + name + ": '" + field + "'");
  return static_cast<int>(v);
}

void write_trajectory_csv(const arm::Trajectory& traj, std::ostream& out) {
  out << "t_s,sx,sy,ex,ey,wx,wy\n";
  for (std::size_t i = 0; i < traj.size(); ++i)
    out << fmt_g17(traj.t_s[i]) << "," << fmt_g17(traj.shoulder[i].x) << ","
        << fmt_g17(traj.shoulder[i].y) << "," << fmt_g17(traj.elbow[i].x)
        << "," << fmt_g17(traj.elbow[i].y) << "," << fmt_g17(traj.wrist[i].x)
        << "," << fmt_g17(traj.wrist[i].y) << "\n";
}

arm::Trajectory read_trajectory_csv(std::istream& in, double rate_hz) {
  auto rows = read_csv(in);
  expect_header(rows, {"t_s", "sx", "sy", "ex", "ey", "wx", "wy"},
                "trajectory csv");
  arm::Trajectory traj;
  traj.rate_hz = rate_hz;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 7)
      throw ValidationError("trajectory csv: row " + std::to_string(i) +
                            " has " + std::to_string(r.size()) +
                            " fields, want 7");
    traj.t_s.push_back(parse_double(r[0], "t_s"));
    traj.shoulder.push_back(
        {parse_double(r[1], "sx"), parse_double(r[2], "sy")});
    traj.elbow.push_back({parse_double(r[3], "ex"), parse_double(r[4], "ey")});
    traj.wrist.push_back({parse_double(r[5], "wx"), parse_double(r[6], "wy")});
  }
  if (traj.t_s.size() >= 2) {
    double dt = traj.t_s[1] - traj.t_s[0];
    if (dt > 0.0) traj.rate_hz = 1.0 / dt;
  }
  if (traj.size() >= 3) arm::synthesize_accel(traj);
  return traj;
}

ImuSeries read_imu_csv(std::istream& in) {
  auto rows = read_csv(in);
  expect_header(rows, {"t_s", "ax", "ay", "az"}, "imu csv");
  ImuSeries series;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 4)
      throw ValidationError("imu csv: row " + std::to_string(i) + " has " +
                            std::to_string(r.size()) + " fields, want 4");
    series.t_s.push_back(parse_double(r[0], "t_s"));
    double ax = parse_double(r[1], "ax");
    double ay = parse_double(r[2], "ay");
    double az = parse_double(r[3], "az");
    series.accel_ms2.push_back(std::sqrt(ax * ax + ay * ay + az * az));
  }
  return series;
}

void write_pressure_csv(const pneumatics::PressureSeries& series,
                        std::ostream& out) {
  out << "t_s,p_kPa\n";
  for (std::size_t i = 0; i < series.t_s.size(); ++i)
    out << fmt_g17(series.t_s[i]) << "," << fmt_g17(series.p_kPa[i]) << "\n";
}

void write_metrics_csv(std::span<const metrics::TrialMetrics> trials,
                       std::ostream& out) {
  out << "shape,p_cm,n,trial,path_cm,si,jerk_ms3,angle_deg\n";
  for (const auto& t : trials)
    out << shape_name(t.variant.shape) << ","
        << fmt_g17(t.variant.cell_length_cm) << "," << t.variant.n_cells
        << "," << t.trial << "," << fmt_g17(t.path_cm) << "," << fmt_g17(t.si)
        << "," << fmt_g17(t.jerk_ms3) << "," << fmt_g17(t.angle_deg) << "\n";
}

std::vector<metrics::TrialMetrics> read_metrics_csv(std::istream& in) {
  auto rows = read_csv(in);
  expect_header(rows,
                {"shape", "p_cm", "n", "trial", "path_cm", "si", "jerk_ms3",
                 "angle_deg"},
                "metrics csv");
  std::vector<metrics::TrialMetrics> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 8)
      throw ValidationError("metrics csv: row " + std::to_string(i) + " has " +
                            std::to_string(r.size()) + " fields, want 8");
    metrics::TrialMetrics t;
    t.variant.shape = parse_shape(r[0]);
    t.variant.cell_length_cm = parse_double(r[1], "p_cm");
    t.variant.n_cells = parse_int(r[2], "n");
    t.trial = parse_int(r[3], "trial");
    t.path_cm = parse_double(r[4], "path_cm");
    t.si = parse_double(r[5], "si");
    t.jerk_ms3 = parse_double(r[6], "jerk_ms3");
    t.angle_deg = parse_double(r[7], "angle_deg");
    out.push_back(t);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("short write: " + path);
}

}  // namespace bellowlab::io
