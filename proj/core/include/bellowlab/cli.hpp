#pragma once

#include <string>
#include <vector>

namespace bellowlab::cli {

/// Entry point shared by the binary and the in-process CLI tests.
/// Returns the process exit code: 0 on success, 2 for invalid input or
/// flags, 1 for internal failures. Honors the BELLOWLAB_OUT environment
/// variable as the default output directory.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace bellowlab::cli
