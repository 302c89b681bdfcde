#include "app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "run_config.hpp"
#include "run_record.hpp"
#include "speclimit/error.hpp"
#include "speclimit/version.hpp"

namespace speclimit::cli {

namespace {

int report_error(std::ostream& err, int code, std::string_view kind, const std::string& message) {
  const nlohmann::json e = {
      {"error", {{"exit_code", code}, {"kind", std::string(kind)}, {"message", message}}}};
  err << e.dump() << '\n';
  return code;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolvability of neighbouring energy levels by period measurement", "speclimit"};
  std::string command_name;
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool version = false;
  app.add_flag("--version", version, "Print toolkit and schema versions");
  auto* command_opt = app.add_option("command", command_name, "spectrum|criterion|noise|simulate|report")
                          ->check(CLI::IsMember({"spectrum", "criterion", "noise", "simulate", "report"}));
  auto* config_opt = app.add_option("--config", config_path, "Run configuration (JSON)");
  app.add_option("--out", out_dir, "Output directory");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed (u64), overrides the config");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, kExitConfig, "Usage", e.what());
  }
  if (version) {
    out << "speclimit " << kToolkitVersion << " (config schema " << kSchemaVersion << ")\n";
    return kExitOk;
  }
  if (command_opt->count() == 0) {
    return report_error(err, kExitConfig, "Usage", "missing command");
  }
  if (config_opt->count() == 0) {
    return report_error(err, kExitConfig, "Usage", "--config is required");
  }
  const Command command = *parse_command(command_name);

  std::optional<RunConfig> config;
  try {
    config.emplace(load_run_config(config_path));
  } catch (const Error& e) {
    return report_error(err, kExitConfig, to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitConfig, "Config", e.what());
  }
  if (config->analysis && *config->analysis != command) {
    return report_error(err, kExitConfig, "Config",
                        "$.analysis: config is for '" + std::string(to_string(*config->analysis)) +
                            "' but the command is '" + command_name + "'");
  }
  if (seed_opt->count() > 0) {
    config->seed = seed;
    config->protocol.seed = seed;
  }

  std::filesystem::path dir = "speclimit-out";
  if (!out_dir.empty()) {
    dir = out_dir;
  } else if (const char* env = std::getenv(kOutputEnv); env != nullptr && *env != '\0') {
    dir = env;
  } else if (config->output_dir) {
    dir = *config->output_dir;
  }

  const std::string started = utc_timestamp();
  try {
    const auto files = run_command(command, *config);
    auto manifest = write_outputs(dir, files);
    const auto record = run_record(command, *config, started, utc_timestamp(), manifest);
    std::ofstream rec(dir / "run.json", std::ios::binary | std::ios::trunc);
    rec << record.dump(2) << '\n';
    if (!rec) throw std::runtime_error("cannot write " + (dir / "run.json").string());
    for (const auto& entry : manifest) {
      out << entry["sha256"].get<std::string>() << "  " << (dir / entry["file"].get<std::string>()).string()
          << '\n';
    }
  } catch (const Error& e) {
    return report_error(err, kExitComputation, to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitComputation, "Internal", e.what());
  }
  return kExitOk;
}

}  // namespace speclimit::cli
