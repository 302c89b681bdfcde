#include "run_config.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "speclimit/error.hpp"
#include "speclimit/model_json.hpp"
#include "speclimit/version.hpp"

namespace speclimit::cli {

namespace {

using namespace json_check;
using nlohmann::json;

constexpr std::string_view kCommandNames[] = {"spectrum", "criterion", "noise", "simulate",
                                              "report"};

int small_int(const json& j, const std::string& path, long long lo, long long hi) {
  const long long v = integer(j, path);
  if (v < lo || v > hi) {
    fail(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::uint64_t seed_value(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::uint64_t>();
  fail(path, "expected an unsigned 64-bit integer");
  return 0;
}

NRange parse_range(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"first", "last"});
  constexpr long long top = 100000000;
  NRange r;
  r.first = small_int(require_key(j, path, "first"), path + ".first", 0, top);
  r.last = small_int(require_key(j, path, "last"), path + ".last", 0, top);
  if (r.last < r.first) fail(path + ".last", "must be >= first");
  return r;
}

criterion::Options parse_levels(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"source", "maslov"});
  criterion::Options o;
  if (j.contains("source")) {
    const std::string s = string(j["source"], path + ".source");
    if (s == "auto") {
      o.source = criterion::LevelSource::Auto;
    } else if (s == "closed-form") {
      o.source = criterion::LevelSource::ClosedForm;
    } else if (s == "semiclassical") {
      o.source = criterion::LevelSource::Semiclassical;
    } else {
      fail(path + ".source", "expected one of auto, closed-form, semiclassical");
    }
  }
  if (j.contains("maslov")) o.maslov = small_int(j["maslov"], path + ".maslov", 0, 3);
  return o;
}

void parse_protocol(const json& j, const std::string& path, sim::PeriodProtocol& p) {
  require_object(j, path);
  reject_unknown(j, path, {"s", "delta_t", "trials", "timing_noise"});
  if (j.contains("s")) p.s = small_int(j["s"], path + ".s", 1, 1000000);
  if (j.contains("trials")) {
    p.trials = small_int(j["trials"], path + ".trials", 10, 100000000);
  }
  if (j.contains("delta_t")) {
    const json& d = j["delta_t"];
    if (d.is_string() && d.get<std::string>() == "saturating") {
      p.delta_t.reset();
    } else {
      const double v = number(d, path + ".delta_t");
      if (v < 0.0) fail(path + ".delta_t", "expected a non-negative number or \"saturating\"");
      p.delta_t = v;
    }
  }
  if (j.contains("timing_noise")) {
    const std::string s = string(j["timing_noise"], path + ".timing_noise");
    if (s == "per-total") {
      p.noise = sim::TimingNoise::PerTotal;
    } else if (s == "per-inversion") {
      p.noise = sim::TimingNoise::PerInversion;
    } else {
      fail(path + ".timing_noise", "expected per-total or per-inversion");
    }
  }
}

NoiseSettings parse_noise(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"delta_x", "delta_p", "samples", "center", "momenta", "levels"});
  NoiseSettings n;
  if (j.contains("delta_x")) n.delta_x = positive_number(j["delta_x"], path + ".delta_x");
  if (j.contains("delta_p")) n.delta_p = positive_number(j["delta_p"], path + ".delta_p");
  if (j.contains("samples")) n.samples = small_int(j["samples"], path + ".samples", 2, 100000000);
  if (j.contains("center")) n.center = number(j["center"], path + ".center");
  if (j.contains("momenta")) n.momenta = number_array(j["momenta"], path + ".momenta");
  if (j.contains("levels")) n.levels = small_int(j["levels"], path + ".levels", 0, 1000000);
  return n;
}

}  // namespace

std::string_view to_string(Command command) {
  return kCommandNames[static_cast<int>(command)];
}

std::optional<Command> parse_command(std::string_view name) {
  for (int i = 0; i < 5; ++i) {
    if (kCommandNames[i] == name) return static_cast<Command>(i);
  }
  return std::nullopt;
}

RunConfig parse_run_config(const json& doc) {
  const std::string root = "$";
  require_object(doc, root);
  reject_unknown(doc, root,
                 {"schema_version", "model", "analysis", "n_range", "levels", "spectrum",
                  "protocol", "noise", "output_dir", "seed"});
  if (doc.contains("schema_version") &&
      integer(doc["schema_version"], "$.schema_version") != kSchemaVersion) {
    fail("$.schema_version", "unsupported schema version (expected " +
                                 std::to_string(kSchemaVersion) + ")");
  }
  RunConfig c(doc, model_from_json(require_key(doc, root, "model"), "$.model"));
  if (doc.contains("analysis")) {
    const std::string a = string(doc["analysis"], "$.analysis");
    c.analysis = parse_command(a);
    if (!c.analysis) fail("$.analysis", "expected one of spectrum, criterion, noise, simulate, report");
  }
  if (doc.contains("n_range")) c.n_range = parse_range(doc["n_range"], "$.n_range");
  if (doc.contains("levels")) c.levels = parse_levels(doc["levels"], "$.levels");
  if (doc.contains("spectrum")) {
    const json& s = doc["spectrum"];
    require_object(s, "$.spectrum");
    reject_unknown(s, "$.spectrum", {"semiclassical"});
    if (s.contains("semiclassical")) {
      c.semiclassical_column = boolean(s["semiclassical"], "$.spectrum.semiclassical");
    }
  }
  if (doc.contains("protocol")) parse_protocol(doc["protocol"], "$.protocol", c.protocol);
  c.protocol.levels = c.levels;
  if (doc.contains("noise")) c.noise = parse_noise(doc["noise"], "$.noise");
  if (doc.contains("output_dir")) {
    c.output_dir = string(doc["output_dir"], "$.output_dir");
    if (c.output_dir->empty()) fail("$.output_dir", "expected a non-empty path");
  }
  if (doc.contains("seed")) c.seed = seed_value(doc["seed"], "$.seed");
  c.protocol.seed = c.seed;
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Config, path + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  json doc;
  try {
    doc = json::parse(text.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Config, path + ": invalid JSON (" + e.what() + ")");
  }
  return parse_run_config(doc);
}

NRange effective_range(const RunConfig& config, Command command) {
  const int ground = config.model.n_min();
  NRange r;
  if (config.n_range) {
    r = *config.n_range;
  } else if (command == Command::Spectrum) {
    r = {ground, ground + 9};
  } else {
    r = {ground + 1, ground + 20};
  }
  if (command != Command::Spectrum) r.first = std::max(r.first, ground + 1);
  r.first = std::max(r.first, ground);
  if (auto top = config.model.n_max()) r.last = std::min(r.last, *top);
  return r;
}

}  // namespace speclimit::cli
