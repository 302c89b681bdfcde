#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace speclimit::cli {

struct OutputFile {
  std::string name;
  std::string content;
};

/// Runs one analysis and returns its files in write order. Pure: the same
/// config always yields the same bytes.
std::vector<OutputFile> run_command(Command command, const RunConfig& config);

}  // namespace speclimit::cli
