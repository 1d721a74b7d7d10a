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

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvpulse/crmodel.hpp"
#include "cvpulse/pulse.hpp"
#include "cvpulse/tomo.hpp"

namespace cvpulse {

// Single-file JSON device description consumed by the CLI.
struct DeviceConfigFile {
  std::string name;
  DeviceTimingConfig timing;
  QubitPair default_pair{0, 1};          // layout for two-qubit circuits
  std::vector<int> three_qubit_layout;   // physical qubits for wires 0,1,2
  std::map<QubitPair, CRCoefficients> cr_coefficients;
  std::map<int, std::array<std::array<double, 2>, 2>> confusion;
  double tau_cx_ns = 0.0;
  double t_cv_ns = 0.0;  // defaults to tau_cx_ns / 2 when absent
  struct Measured {
    std::optional<double> pulse_cv_total_ns;
    std::optional<double> qasm_cv_total_ns;
    std::optional<double> optimal_cr_duration_ns;
  } measured;
};

DeviceConfigFile parse_device_config(const std::string& json_text);
DeviceConfigFile load_device_config(const std::string& path);

// Per-qubit confusion matrices for the listed physical qubits, in order.
// Throws if any qubit is missing from the config.
ConfusionMatrix confusion_for_qubits(const DeviceConfigFile& cfg,
                                     const std::vector<int>& qubits);

}  // namespace cvpulse
