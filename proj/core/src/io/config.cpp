#include "bellowlab/io/config.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "bellowlab/io/csv.hpp"

namespace bellowlab::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) +
                            ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ValidationError("config line " + std::to_string(lineno) +
                            ": empty key or value");
    if (!out.emplace(key, value).second)
      throw ValidationError("config: duplicate key '" + key + "'");
  }
  return out;
}

pneumatics::PneumaticConfig load_pneumatic_config(std::istream& in) {
  auto kv = parse_key_values(in);
  pneumatics::PneumaticConfig cfg;
  auto take = [&kv](const char* key, double& slot) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    slot = parse_double(it->second, key);
    kv.erase(it);
  };
  take("steady_pressure_kPa", cfg.steady_pressure_kPa);
  take("supply_flow_cm3_s", cfg.supply_flow_cm3_s);
  take("resistance_square", cfg.resistance_square);
  take("resistance_rectangle", cfg.resistance_rectangle);
  take("resistance_circle", cfg.resistance_circle);
  take("completion_fraction", cfg.completion_fraction);
  take("window_s", cfg.window_s);
  if (!kv.empty())
    throw ValidationError("pneumatic config: unknown key '" +
                          kv.begin()->first + "'");
  pneumatics::validate(cfg);
  return cfg;
}

pneumatics::PneumaticConfig load_pneumatic_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open pneumatic config: " + path);
  return load_pneumatic_config(in);
}

void save_pneumatic_config(const pneumatics::PneumaticConfig& cfg,
                           std::ostream& out) {
  out << "steady_pressure_kPa = " << fmt_g17(cfg.steady_pressure_kPa) << "\n"
      << "supply_flow_cm3_s = " << fmt_g17(cfg.supply_flow_cm3_s) << "\n"
      << "resistance_square = " << fmt_g17(cfg.resistance_square) << "\n"
      << "resistance_rectangle = " << fmt_g17(cfg.resistance_rectangle)
      << "\n"
      << "resistance_circle = " << fmt_g17(cfg.resistance_circle) << "\n"
      << "completion_fraction = " << fmt_g17(cfg.completion_fraction) << "\n"
      << "window_s = " << fmt_g17(cfg.window_s) << "\n";
}

}  // namespace bellowlab::io
