// Copyright 2026 The cvpulse Authors
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

#include "cvpulse/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cvpulse {

namespace {

using nlohmann::json;

QubitPair parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == key.size()) {
    throw std::invalid_argument("device config: pair key '" + key + "' must be 'a,b'");
  }
  int a = 0, b = 0;
  try {
    a = std::stoi(key.substr(0, comma));
    b = std::stoi(key.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("device config: pair key '" + key + "' must be 'a,b'");
  }
  if (a < 0 || b < 0 || a == b) {
    throw std::invalid_argument("device config: pair key '" + key + "' is not a valid edge");
  }
  return {std::min(a, b), std::max(a, b)};
}

double require_number(const json& j, const char* section, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw std::invalid_argument(std::string("device config: ") + section + "." + key +
                                " must be a number");
  }
  return j[key].get<double>();
}

double optional_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    throw std::invalid_argument(std::string("device config: ") + key + " must be a number");
  }
  return j[key].get<double>();
}

}  // namespace

DeviceConfigFile parse_device_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("device config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("device config: top level must be an object");

  DeviceConfigFile cfg;
  if (j.contains("name")) cfg.name = j["name"].get<std::string>();

  if (!j.contains("timing") || !j["timing"].is_object()) {
    throw std::invalid_argument("device config: missing timing object");
  }
  const json& jt = j["timing"];
  cfg.timing.dt_granularity_ns = require_number(jt, "timing", "dt_granularity_ns");
  cfg.timing.single_qubit_pulse_ns = require_number(jt, "timing", "single_qubit_pulse_ns");
  cfg.timing.cr_edge_ns = require_number(jt, "timing", "cr_edge_ns");
  if (!(cfg.timing.dt_granularity_ns > 0.0)) {
    throw std::invalid_argument("device config: timing.dt_granularity_ns must be positive");
  }
  if (jt.contains("per_edge_cr_flat_top_ns")) {
    for (const auto& [key, val] : jt["per_edge_cr_flat_top_ns"].items()) {
      if (!val.is_number() || val.get<double>() < 0.0) {
        throw std::invalid_argument("device config: flat-top for edge '" + key +
                                    "' must be a non-negative number");
      }
      cfg.timing.per_edge_cr_flat_top_ns[parse_pair_key(key)] = val.get<double>();
    }
  }
  if (jt.contains("control_channel_index")) {
    for (const auto& [key, val] : jt["control_channel_index"].items()) {
      if (!val.is_number_integer() || val.get<int>() < 0) {
        throw std::invalid_argument("device config: control channel for edge '" + key +
                                    "' must be a non-negative integer");
      }
      cfg.timing.control_channel_index[parse_pair_key(key)] = val.get<int>();
    }
  }

  if (j.contains("default_pair")) {
    const json& jp = j["default_pair"];
    if (!jp.is_array() || jp.size() != 2) {
      throw std::invalid_argument("device config: default_pair must be [control, target]");
    }
    cfg.default_pair = {jp[0].get<int>(), jp[1].get<int>()};
  }
  if (j.contains("three_qubit_layout")) {
    for (const auto& q : j["three_qubit_layout"]) {
      cfg.three_qubit_layout.push_back(q.get<int>());
    }
    if (cfg.three_qubit_layout.size() != 3) {
      throw std::invalid_argument("device config: three_qubit_layout must list 3 qubits");
    }
  }

  if (!j.contains("nominal_durations") || !j["nominal_durations"].is_object()) {
    throw std::invalid_argument("device config: missing nominal_durations object");
  }
  const json& jn = j["nominal_durations"];
  cfg.tau_cx_ns = require_number(jn, "nominal_durations", "tau_cx_ns");
  if (!(cfg.tau_cx_ns > 0.0)) {
    throw std::invalid_argument("device config: nominal_durations.tau_cx_ns must be positive");
  }
  cfg.t_cv_ns = optional_number(jn, "t_cv_ns", cfg.tau_cx_ns / 2.0);
  if (!(cfg.t_cv_ns > 0.0)) {
    throw std::invalid_argument("device config: nominal_durations.t_cv_ns must be positive");
  }

  if (j.contains("cr_coefficients")) {
    for (const auto& [key, val] : j["cr_coefficients"].items()) {
      if (!val.is_object()) {
        throw std::invalid_argument("device config: cr_coefficients entries must be objects");
      }
      CRCoefficients c;
      c.omega_ZI = optional_number(val, "omega_ZI", 0.0);
      c.omega_ZX = optional_number(val, "omega_ZX", 0.0);
      c.omega_ZY = optional_number(val, "omega_ZY", 0.0);
      c.omega_ZZ = optional_number(val, "omega_ZZ", 0.0);
      c.omega_IX = optional_number(val, "omega_IX", 0.0);
      c.omega_IY = optional_number(val, "omega_IY", 0.0);
      c.omega_IZ = optional_number(val, "omega_IZ", 0.0);
      c.amplitude_A = optional_number(val, "amplitude_A", 0.0);
      c.phase_phi = optional_number(val, "phase_phi", 0.0);
      cfg.cr_coefficients[parse_pair_key(key)] = c;
    }
  }

  if (j.contains("confusion")) {
    for (const auto& [key, val] : j["confusion"].items()) {
      int q = 0;
      try {
        q = std::stoi(key);
      } catch (const std::exception&) {
        throw std::invalid_argument("device config: confusion keys must be qubit indices");
      }
      if (q < 0 || !val.is_array() || val.size() != 2 || !val[0].is_array() ||
          !val[1].is_array() || val[0].size() != 2 || val[1].size() != 2) {
        throw std::invalid_argument("device config: confusion['" + key + "'] must be 2x2");
      }
      std::array<std::array<double, 2>, 2> m{};
      for (int r = 0; r < 2; ++r) {
        for (int cidx = 0; cidx < 2; ++cidx) {
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)] =
              val[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)].get<double>();
        }
      }
      cfg.confusion[q] = m;
    }
  }

  if (j.contains("measured") && j["measured"].is_object()) {
    const json& jm = j["measured"];
    if (jm.contains("pulse_cv_total_ns")) {
      cfg.measured.pulse_cv_total_ns = jm["pulse_cv_total_ns"].get<double>();
    }
    if (jm.contains("qasm_cv_total_ns")) {
      cfg.measured.qasm_cv_total_ns = jm["qasm_cv_total_ns"].get<double>();
    }
    if (jm.contains("optimal_cr_duration_ns")) {
      cfg.measured.optimal_cr_duration_ns = jm["optimal_cr_duration_ns"].get<double>();
    }
  }

  return cfg;
}

DeviceConfigFile load_device_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("device config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_device_config(buf.str());
}

ConfusionMatrix confusion_for_qubits(const DeviceConfigFile& cfg,
                                     const std::vector<int>& qubits) {
  ConfusionMatrix cm;
  for (int q : qubits) {
    const auto it = cfg.confusion.find(q);
    if (it == cfg.confusion.end()) {
      throw std::invalid_argument("device config: no confusion matrix for qubit " +
                                  std::to_string(q));
    }
    cm.per_qubit.push_back(it->second);
  }
  return cm;
}

}  // namespace cvpulse
