#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "speclimit/models.hpp"

namespace speclimit {

/**
 * Model documents look like
 *
 *   {"kind": "morse", "units": "molecular",
 *    "params": {"mass": 0.50391, "depth": 4.7446, "range": 1.9426}}
 *
 * or a bare string naming a built-in preset. Unknown keys, missing keys and
 * wrong types are rejected with an Error(Config) whose message starts with
 * the JSON path of the offending value, e.g. "$.model.params.width: ...".
 */
ModelSpec model_from_json(const nlohmann::json& doc, const std::string& path = "$");

nlohmann::json model_to_json(const ModelSpec& model);

/// Built-in presets: "box", "harmonic", "hydrogen", "h2-morse".
ModelSpec preset(std::string_view name);
nlohmann::json preset_document(std::string_view name);
std::vector<std::string> preset_names();

namespace json_check {

// Small helpers shared by the config validators.
[[noreturn]] void fail(const std::string& path, const std::string& message);
void require_object(const nlohmann::json& j, const std::string& path);
void reject_unknown(const nlohmann::json& j, const std::string& path,
                    const std::vector<std::string>& allowed);
const nlohmann::json& require_key(const nlohmann::json& j, const std::string& path,
                                  const std::string& key);
double number(const nlohmann::json& j, const std::string& path);
double positive_number(const nlohmann::json& j, const std::string& path);
long long integer(const nlohmann::json& j, const std::string& path);
std::string string(const nlohmann::json& j, const std::string& path);
std::vector<double> number_array(const nlohmann::json& j, const std::string& path);

}  // namespace json_check

}  // namespace speclimit
