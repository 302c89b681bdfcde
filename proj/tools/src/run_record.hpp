#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace speclimit::cli {

std::string sha256_hex(std::string_view data);

/// UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

/// Writes the files in order; returns their manifest entries
/// {file, bytes, sha256} sorted by name.
nlohmann::json write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files);

/// RunRecord document written as run.json next to the outputs. It is not part
/// of its own manifest since it carries the wall-clock timestamps.
nlohmann::json run_record(Command command, const RunConfig& config, const std::string& started,
                          const std::string& finished, nlohmann::json manifest);

}  // namespace speclimit::cli
