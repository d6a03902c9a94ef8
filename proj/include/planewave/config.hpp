#pragma once

// JSON configuration ingestion for the CLI and tests.
//
// Schema (strict, unknown top-level keys rejected):
//   {"params":   {"a": 0.1, "sigma": 5.0, "kappa": [0.3, 0.2, 0.4]}}
// or
//   {"physical": {"A0": ..., "k": ..., "mass": ..., "charge": ..., "units": "si"},
//    "kprime":   [kx, ky, kz]}
//
// Exactly one of "params"/"physical" must be present.  An optional
// "polarization" key is accepted only with the value "x".

#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "planewave/model.hpp"

namespace planewave {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double number_field(const nlohmann::json& obj, const std::string& scope,
                           const std::string& key) {
  if (!obj.contains(key)) {
    throw ConfigError(scope + ": missing required key \"" + key + "\"");
  }
  const auto& value = obj.at(key);
  if (!value.is_number()) {
    throw ConfigError(scope + ": key \"" + key + "\" must be a number");
  }
  return value.get<double>();
}

inline Vec3 vector_field(const nlohmann::json& obj, const std::string& scope,
                         const std::string& key) {
  if (!obj.contains(key)) {
    throw ConfigError(scope + ": missing required key \"" + key + "\"");
  }
  const auto& value = obj.at(key);
  if (!value.is_array() || value.size() != 3) {
    throw ConfigError(scope + ": key \"" + key +
                      "\" must be an array of exactly 3 numbers");
  }
  for (const auto& entry : value) {
    if (!entry.is_number()) {
      throw ConfigError(scope + ": key \"" + key +
                        "\" must contain numbers only");
    }
  }
  return Vec3{value[0].get<double>(), value[1].get<double>(),
              value[2].get<double>()};
}

inline void reject_unknown_keys(const nlohmann::json& obj,
                                const std::string& scope,
                                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(scope + ": unknown key \"" + item.key() + "\"");
    }
  }
}

inline UnitSystem parse_unit_system(const nlohmann::json& obj,
                                    const std::string& scope) {
  if (!obj.contains("units")) {
    throw ConfigError(scope + ": missing required key \"units\"");
  }
  const auto& value = obj.at("units");
  if (!value.is_string()) {
    throw ConfigError(scope + ": key \"units\" must be a string");
  }
  const auto text = value.get<std::string>();
  if (text == "si") return UnitSystem::si;
  if (text == "atomic") return UnitSystem::atomic;
  if (text == "dimensionless") return UnitSystem::dimensionless;
  throw ConfigError(scope + ": units must be one of \"si\", \"atomic\", "
                            "\"dimensionless\" (got \"" + text + "\")");
}

}  // namespace detail

// Parses a configuration document and reduces it to DimensionlessParams.
// Model-level invariant violations (InvalidConfig, UnitError) propagate as-is;
// structural problems raise ConfigError.
inline DimensionlessParams params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("config: top-level document must be a JSON object");
  }
  detail::reject_unknown_keys(doc, "config",
                              {"params", "physical", "kprime", "polarization"});

  if (doc.contains("polarization")) {
    const auto& pol = doc.at("polarization");
    if (!pol.is_string() || pol.get<std::string>() != "x") {
      throw ConfigError(
          "config: only \"x\" polarization is supported; other polarizations "
          "are not implemented");
    }
  }

  const bool has_params = doc.contains("params");
  const bool has_physical = doc.contains("physical");
  if (has_params == has_physical) {
    throw ConfigError(
        "config: exactly one of \"params\"/\"physical\" must be present");
  }

  if (has_params) {
    if (doc.contains("kprime")) {
      throw ConfigError("config: \"kprime\" is only valid with \"physical\"");
    }
    const auto& params = doc.at("params");
    if (!params.is_object()) {
      throw ConfigError("config: \"params\" must be an object");
    }
    detail::reject_unknown_keys(params, "params", {"a", "sigma", "kappa"});
    DimensionlessParams out;
    out.a = detail::number_field(params, "params", "a");
    out.sigma = detail::number_field(params, "params", "sigma");
    out.kappa = detail::vector_field(params, "params", "kappa");
    validate(out);
    return out;
  }

  const auto& physical = doc.at("physical");
  if (!physical.is_object()) {
    throw ConfigError("config: \"physical\" must be an object");
  }
  detail::reject_unknown_keys(physical, "physical",
                              {"A0", "k", "mass", "charge", "units"});
  PhysicalConfig cfg;
  cfg.vector_potential_amplitude = detail::number_field(physical, "physical", "A0");
  cfg.wavenumber = detail::number_field(physical, "physical", "k");
  cfg.particle_mass = detail::number_field(physical, "physical", "mass");
  cfg.particle_charge = detail::number_field(physical, "physical", "charge");
  cfg.unit_system = detail::parse_unit_system(physical, "physical");
  const Vec3 kprime = detail::vector_field(doc, "config", "kprime");
  return to_dimensionless(cfg, kprime);
}

inline DimensionlessParams params_from_stream(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError(std::string("config: invalid JSON: ") + err.what());
  }
  return params_from_json(doc);
}

inline DimensionlessParams params_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open \"" + path + "\"");
  }
  return params_from_stream(in);
}

}  // namespace planewave
