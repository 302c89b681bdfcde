#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace speclimit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitComputation = 3;

/// Environment variable that overrides the output directory.
inline constexpr const char* kOutputEnv = "SPECLIMIT_OUT";

/// Whole command line front end. Never throws; failures are reported as a
/// one-line JSON object on `err` and mapped to exit codes 2 and 3.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace speclimit::cli
