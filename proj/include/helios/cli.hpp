#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace helios::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line; args[0] is the program name. Payload goes to
/// `out`, diagnostics to `err`. Reads HELIOS_SEED as the default seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helios::cli
