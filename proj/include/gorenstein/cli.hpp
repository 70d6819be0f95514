#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gorenstein {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 success,
/// 2 input error, 3 hypothesis violation, 4 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gorenstein
