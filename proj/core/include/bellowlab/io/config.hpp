#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "bellowlab/pneumatics.hpp"

namespace bellowlab::io {

/// key = value lines; '#' starts a comment, blank lines ignored. Keys and
/// values are trimmed. Duplicate keys are an error.
std::map<std::string, std::string> parse_key_values(std::istream& in);

/// Reads a PneumaticConfig. Unknown keys are an error (they are almost
/// always typos); missing keys keep their defaults.
pneumatics::PneumaticConfig load_pneumatic_config(std::istream& in);
pneumatics::PneumaticConfig load_pneumatic_config_file(
    const std::string& path);

void save_pneumatic_config(const pneumatics::PneumaticConfig& cfg,
                           std::ostream& out);

}  // namespace bellowlab::io
