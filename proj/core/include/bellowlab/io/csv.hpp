#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bellowlab/arm.hpp"
#include "bellowlab/metrics.hpp"
#include "bellowlab/pneumatics.hpp"
#include "bellowlab/types.hpp"

namespace bellowlab::io {

/// Shortest decimal that round-trips the double exactly (%.17g trimmed by
/// the printf g conversion). All data CSVs use this.
std::string fmt_g17(double v);

/// Minimal CSV reader: comma-separated, no quoting (none of our schemas
/// needs it), CRLF tolerated, blank lines skipped.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

/// Throws ValidationError unless rows[0] equals the expected header.
void expect_header(const std::vector<std::vector<std::string>>& rows,
                   const std::vector<std::string>& expected,
                   const std::string& what);

double parse_double(const std::string& field, const std::string& name);
int parse_int(const std::string& field, const std::string& name);

/// Trajectory schema: t_s,sx,sy,ex,ey,wx,wy
void write_trajectory_csv(const arm::Trajectory& traj, std::ostream& out);
arm::Trajectory read_trajectory_csv(std::istream& in, double rate_hz = 60.0);

/// IMU schema: t_s,ax,ay,az (read only; magnitude computed on load).
struct ImuSeries {
  std::vector<double> t_s;
  std::vector<double> accel_ms2;
};
ImuSeries read_imu_csv(std::istream& in);

/// Pressure schema: t_s,p_kPa
void write_pressure_csv(const pneumatics::PressureSeries& series,
                        std::ostream& out);

/// Metrics schema: shape,p_cm,n,trial,path_cm,si,jerk_ms3,angle_deg
void write_metrics_csv(std::span<const metrics::TrialMetrics> trials,
                       std::ostream& out);
std::vector<metrics::TrialMetrics> read_metrics_csv(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bellowlab::io
