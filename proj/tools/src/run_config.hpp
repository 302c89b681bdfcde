#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "speclimit/criterion.hpp"
#include "speclimit/measurement.hpp"
#include "speclimit/models.hpp"

namespace speclimit::cli {

enum class Command { Spectrum, Criterion, Noise, Simulate, Report };

std::string_view to_string(Command command);
std::optional<Command> parse_command(std::string_view name);

struct NRange {
  int first = 0;
  int last = 0;
};

struct NoiseSettings {
  std::optional<double> delta_x;  ///< default sqrt(hbar / 2)
  std::optional<double> delta_p;  ///< default sqrt(hbar / 2)
  long samples = 100000;
  double center = 0.0;
  /// Momenta in units of hbar / delta_x.
  std::vector<double> momenta{0.0, 0.5, 1.0, 2.0};
  int levels = 20;
};

struct RunConfig {
  RunConfig(nlohmann::json doc, ModelSpec m) : document(std::move(doc)), model(std::move(m)) {}

  nlohmann::json document;
  ModelSpec model;
  std::optional<Command> analysis;
  std::optional<NRange> n_range;
  criterion::Options levels;
  bool semiclassical_column = false;
  sim::PeriodProtocol protocol;
  NoiseSettings noise;
  std::optional<std::string> output_dir;
  std::uint64_t seed = 0;
};

/// Validates the whole document before anything is computed. Every problem
/// is an Error of kind Config whose message starts with a JSON path.
RunConfig parse_run_config(const nlohmann::json& doc);

/// Reads and parses a config file.
RunConfig load_run_config(const std::string& path);

/// n range for a command, defaulting to twenty pairs (ten levels for spectra)
/// above the ground state, clipped to the bound spectrum.
NRange effective_range(const RunConfig& config, Command command);

}  // namespace speclimit::cli
