#include "speclimit/model_json.hpp"

#include <cmath>

#include "speclimit/error.hpp"

namespace speclimit {

namespace json_check {

void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::Config, path + ": " + message);
}

void require_object(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown(const nlohmann::json& j, const std::string& path,
                    const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& a : allowed) known = known || a == key;
    if (!known) fail(path + "." + key, "unknown key");
  }
}

const nlohmann::json& require_key(const nlohmann::json& j, const std::string& path,
                                  const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required key");
  return *it;
}

double number(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

double positive_number(const nlohmann::json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0.0)) fail(path, "expected a strictly positive number");
  return v;
}

long long integer(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

std::string string(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> number_array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace json_check

namespace {

using namespace json_check;

// H2 ground electronic state: D_e = 4.7446 eV, alpha = 1.9426 1/A,
// reduced mass 0.50391 amu (standard Morse fit values).
const char* const kPresets[][2] = {
    {"box", R"({"kind":"box","units":"natural-box","params":{"mass":1.0,"width":1.0}})"},
    {"harmonic",
     R"({"kind":"harmonic","units":"oscillator","params":{"mass":1.0,"stiffness":1.0}})"},
    {"hydrogen",
     R"({"kind":"hydrogenoid","units":"atomic","params":{"reduced_mass":1.0,"charge_number":1,"elementary_charge":1.0}})"},
    {"h2-morse",
     R"({"kind":"morse","units":"molecular","params":{"mass":0.50391,"depth":4.7446,"range":1.9426}})"},
};

UnitSystem parse_units(const nlohmann::json& j, const std::string& path) {
  const std::string name = string(j, path);
  for (const auto& known : unit_system_names()) {
    if (known == name) return unit_system(name);
  }
  fail(path, "unknown unit system '" + name + "'");
}

ModelParams parse_params(const std::string& kind, const nlohmann::json& p,
                         const std::string& path) {
  require_object(p, path);
  if (kind == "box") {
    reject_unknown(p, path, {"mass", "width"});
    return BoxParams{positive_number(require_key(p, path, "mass"), path + ".mass"),
                     positive_number(require_key(p, path, "width"), path + ".width")};
  }
  if (kind == "harmonic") {
    reject_unknown(p, path, {"mass", "stiffness"});
    return HarmonicParams{positive_number(require_key(p, path, "mass"), path + ".mass"),
                          positive_number(require_key(p, path, "stiffness"), path + ".stiffness")};
  }
  if (kind == "hydrogenoid") {
    reject_unknown(p, path, {"reduced_mass", "charge_number", "elementary_charge"});
    const long long z = integer(require_key(p, path, "charge_number"), path + ".charge_number");
    if (z < 1 || z > 200) fail(path + ".charge_number", "expected an integer in [1, 200]");
    return HydrogenoidParams{
        positive_number(require_key(p, path, "reduced_mass"), path + ".reduced_mass"),
        static_cast<int>(z),
        positive_number(require_key(p, path, "elementary_charge"), path + ".elementary_charge")};
  }
  if (kind == "morse") {
    reject_unknown(p, path, {"mass", "depth", "range"});
    return MorseParams{positive_number(require_key(p, path, "mass"), path + ".mass"),
                       positive_number(require_key(p, path, "depth"), path + ".depth"),
                       positive_number(require_key(p, path, "range"), path + ".range")};
  }
  if (kind == "numeric") {
    reject_unknown(p, path, {"mass", "x", "u"});
    NumericPotentialParams out;
    out.mass = positive_number(require_key(p, path, "mass"), path + ".mass");
    out.x = number_array(require_key(p, path, "x"), path + ".x");
    out.u = number_array(require_key(p, path, "u"), path + ".u");
    if (out.x.size() < 3) fail(path + ".x", "expected at least 3 samples");
    if (out.u.size() != out.x.size()) fail(path + ".u", "length must match x");
    for (std::size_t i = 1; i < out.x.size(); ++i) {
      if (!(out.x[i] > out.x[i - 1])) {
        fail(path + ".x[" + std::to_string(i) + "]", "abscissae must be strictly increasing");
      }
    }
    return out;
  }
  fail(path, "internal: unhandled kind");
}

}  // namespace

ModelSpec model_from_json(const nlohmann::json& doc, const std::string& path) {
  if (doc.is_string()) {
    const std::string name = doc.get<std::string>();
    for (const auto& entry : kPresets) {
      if (name == entry[0]) return model_from_json(nlohmann::json::parse(entry[1]), path);
    }
    fail(path, "unknown preset '" + name + "'");
  }
  require_object(doc, path);
  reject_unknown(doc, path, {"kind", "units", "params"});
  const std::string kind = string(require_key(doc, path, "kind"), path + ".kind");
  if (kind != "box" && kind != "harmonic" && kind != "hydrogenoid" && kind != "morse" &&
      kind != "numeric") {
    fail(path + ".kind",
         "expected one of box, harmonic, hydrogenoid, morse, numeric (got '" + kind + "')");
  }
  UnitSystem units = parse_units(require_key(doc, path, "units"), path + ".units");
  ModelParams params = parse_params(kind, require_key(doc, path, "params"), path + ".params");
  try {
    return ModelSpec(std::move(params), std::move(units));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

nlohmann::json model_to_json(const ModelSpec& model) {
  nlohmann::json params;
  switch (model.kind()) {
    case ModelKind::Box: {
      const auto& p = model.as<BoxParams>();
      params = {{"mass", p.mass}, {"width", p.width}};
      break;
    }
    case ModelKind::Harmonic: {
      const auto& p = model.as<HarmonicParams>();
      params = {{"mass", p.mass}, {"stiffness", p.stiffness}};
      break;
    }
    case ModelKind::Hydrogenoid: {
      const auto& p = model.as<HydrogenoidParams>();
      params = {{"reduced_mass", p.reduced_mass},
                {"charge_number", p.charge_number},
                {"elementary_charge", p.elementary_charge}};
      break;
    }
    case ModelKind::Morse: {
      const auto& p = model.as<MorseParams>();
      params = {{"mass", p.mass}, {"depth", p.depth}, {"range", p.range}};
      break;
    }
    case ModelKind::NumericPotential: {
      const auto& p = model.as<NumericPotentialParams>();
      params = {{"mass", p.mass}, {"x", p.x}, {"u", p.u}};
      break;
    }
  }
  return {{"kind", std::string(to_string(model.kind()))},
          {"units", model.units().name},
          {"params", params}};
}

nlohmann::json preset_document(std::string_view name) {
  for (const auto& entry : kPresets) {
    if (name == entry[0]) return nlohmann::json::parse(entry[1]);
  }
  throw Error(ErrorKind::Config, "unknown preset '" + std::string(name) + "'");
}

ModelSpec preset(std::string_view name) { return model_from_json(preset_document(name)); }

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& entry : kPresets) out.emplace_back(entry[0]);
  return out;
}

}  // namespace speclimit
