#include "run_record.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>

#include <openssl/evp.h>

#include "speclimit/error.hpp"
#include "speclimit/model_json.hpp"
#include "speclimit/version.hpp"

namespace speclimit::cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
  std::vector<OutputFile const*> order;
  for (const auto& f : files) {
    std::ofstream out(dir / f.name, std::ios::binary | std::ios::trunc);
    out.write(f.content.data(), static_cast<std::streamsize>(f.content.size()));
    if (!out) throw std::runtime_error("cannot write " + (dir / f.name).string());
    order.push_back(&f);
  }
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->name < b->name; });
  nlohmann::json manifest = nlohmann::json::array();
  for (const auto* f : order) {
    manifest.push_back({{"file", f->name}, {"bytes", f->content.size()}, {"sha256", sha256_hex(f->content)}});
  }
  return manifest;
}

nlohmann::json run_record(Command command, const RunConfig& config, const std::string& started,
                          const std::string& finished, nlohmann::json manifest) {
  return {{"toolkit_version", kToolkitVersion},
          {"schema_version", kSchemaVersion},
          {"command", std::string(to_string(command))},
          {"seed", config.seed},
          {"config", config.document},
          {"model", model_to_json(config.model)},
          {"started_at", started},
          {"finished_at", finished},
          {"outputs", std::move(manifest)}};
}

}  // namespace speclimit::cli
