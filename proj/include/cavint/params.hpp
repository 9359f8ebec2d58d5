// Copyright 2026 The cavint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cavint/error.hpp"

namespace cavint {

/// Physical parameters of the driven emitter-cavity model, in the frame
/// rotating at the common laser frequency. All frequencies share one
/// arbitrary unit; the CLI presets use gamma0 = 1.
struct SystemParams {
  double delta_a = 0.0;      // atom-laser detuning
  double delta_c = 0.0;      // cavity-laser detuning
  double omega_rabi = 0.0;   // Rabi frequency of the strong laser
  double epsilon = 0.0;      // amplitude of the weak cavity drive
  double g = 0.0;            // atom-cavity coupling
  double kappa = 1.0;        // cavity photon leak rate
  double gamma0 = 0.0;       // spontaneous rate at the laser frequency
  double gamma_plus = 0.0;   // spontaneous rate at the upper sideband
  double gamma_minus = 0.0;  // spontaneous rate at the lower sideband
  double gamma_d = 0.0;      // pure dephasing rate
  double phi = 0.0;          // phase difference of the two lasers

  bool operator==(const SystemParams&) const = default;

  /// Free space: all three spontaneous rates coincide.
  bool symmetric_rates() const noexcept {
    return gamma0 == gamma_plus && gamma_plus == gamma_minus;
  }
};

inline constexpr std::array<std::string_view, 11> kParamNames = {
    "delta_a", "delta_c", "omega_rabi", "epsilon", "g",   "kappa",
    "gamma0",  "gamma_plus", "gamma_minus", "gamma_d", "phi"};

inline bool is_param_name(std::string_view name) noexcept {
  for (auto n : kParamNames) {
    if (n == name) return true;
  }
  return false;
}

inline double& param_ref(SystemParams& p, std::string_view name) {
  if (name == "delta_a") return p.delta_a;
  if (name == "delta_c") return p.delta_c;
  if (name == "omega_rabi") return p.omega_rabi;
  if (name == "epsilon") return p.epsilon;
  if (name == "g") return p.g;
  if (name == "kappa") return p.kappa;
  if (name == "gamma0") return p.gamma0;
  if (name == "gamma_plus") return p.gamma_plus;
  if (name == "gamma_minus") return p.gamma_minus;
  if (name == "gamma_d") return p.gamma_d;
  if (name == "phi") return p.phi;
  throw Error(ErrorCode::InvalidArgument,
              "unknown parameter '" + std::string(name) + "'");
}

inline double param_value(const SystemParams& p, std::string_view name) {
  return param_ref(const_cast<SystemParams&>(p), name);
}

/// Returns p unchanged when every invariant holds, throws otherwise.
inline SystemParams validate(const SystemParams& p) {
  for (auto name : kParamNames) {
    if (!std::isfinite(param_value(p, name))) {
      throw Error(ErrorCode::NonFiniteParameter,
                  std::string(name) + " is not finite");
    }
  }
  if (p.kappa <= 0.0) {
    throw Error(ErrorCode::NonPositiveKappa, "kappa must be > 0");
  }
  for (auto name : {"omega_rabi", "epsilon", "g", "gamma0", "gamma_plus",
                    "gamma_minus", "gamma_d"}) {
    if (param_value(p, name) < 0.0) {
      throw Error(ErrorCode::NegativeRate, std::string(name) + " must be >= 0");
    }
  }
  if (p.omega_rabi == 0.0 && p.delta_a == 0.0) {
    throw Error(ErrorCode::DegenerateDressing,
                "omega_rabi and delta_a are both zero; dressing angle undefined");
  }
  return p;
}

inline nlohmann::json to_json(const SystemParams& p) {
  nlohmann::json j = nlohmann::json::object();
  for (auto name : kParamNames) j[std::string(name)] = param_value(p, name);
  return j;
}

/// Overlays the keys of a flat JSON object onto `base`. Keys must be field
/// names and values must be numbers; missing keys keep their base value.
inline SystemParams params_from_json(const nlohmann::json& j,
                                     SystemParams base = {}) {
  if (!j.is_object()) {
    throw Error(ErrorCode::ConfigError, "parameter config must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (!is_param_name(key)) {
      throw Error(ErrorCode::ConfigError, "unknown parameter key '" + key + "'");
    }
    if (!value.is_number()) {
      throw Error(ErrorCode::ConfigError, "value of '" + key + "' is not a number");
    }
    param_ref(base, key) = value.get<double>();
  }
  return base;
}

inline SystemParams load_params_file(const std::string& path,
                                     SystemParams base = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, path + ": " + e.what());
  }
  return params_from_json(j, base);
}

}  // namespace cavint
