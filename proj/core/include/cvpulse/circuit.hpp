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

#include <map>
#include <string>
#include <vector>

#include "cvpulse/gates.hpp"
#include "cvpulse/linalg.hpp"
#include "cvpulse/pulse.hpp"

namespace cvpulse {

struct CircuitOp {
  GateName gate;
  std::vector<int> qubits;  // distinct, < num_qubits; first listed = control
  std::vector<double> params;
};

struct Circuit {
  int num_qubits = 1;
  std::vector<CircuitOp> ops;  // earliest op acts first
};

enum class NamedCircuit {
  QASM_CV,     // CV from two CX plus locals
  SQISWAP_CX,  // sqrt(iSWAP) from 2 CX
  SQISWAP_CV,  // sqrt(iSWAP) from 2 CV
  SQSWAP_CX,   // sqrt(SWAP) from 3 CX
  SQSWAP_CV,   // sqrt(SWAP) from 3 CV
  TOF_CX,      // Toffoli from 8 CX (linear coupling)
  TOF_CV,      // control-swapped Toffoli from 3 CX + 3 CV
};

const char* to_string(NamedCircuit id);
NamedCircuit named_circuit_from_string(const std::string& s);

// Product of op matrices embedded by qubit indices, earliest op first.
// Qubit 0 is the most significant tensor factor.
Unitary eval_unitary(const Circuit& c);

// Literal transcriptions of the published circuit diagrams. The final
// single-qubit column of SQSWAP_CV is derived as the unique completion of
// its three-CV core (see the note next to the verification test).
Circuit build_named(NamedCircuit id);

// The unitary each named circuit implements (TOF_CV: SWAP(0,1) * Toffoli).
Unitary named_circuit_target(NamedCircuit id);

bool equiv_up_to_phase(const Circuit& c, const Unitary& target, double tol);

// List-scheduled critical path on qubit resources: ops sharing a qubit
// serialize, disjoint ops overlap. Two-qubit durations derive from the pulse
// templates on the op's pair; diagonal single-qubit gates (Z, T, Tdg) are
// virtual and free; other single-qubit gates cost one standard pulse.
// Entries in `durations` override the derivation per gate name.
double circuit_gate_time(const Circuit& c, const DeviceTimingConfig& cfg,
                         const std::map<GateName, double>& durations = {});

// Gate-level schedule rows for the same list scheduling (one row per qubit
// an op touches, channel "q<i>"), exportable like a pulse schedule.
PulseSchedule circuit_schedule(const Circuit& c, const DeviceTimingConfig& cfg,
                               const std::map<GateName, double>& durations = {});

// Rewires qubit i to mapping[i] (e.g. onto physical device qubits).
Circuit remap_qubits(const Circuit& c, const std::vector<int>& mapping);

int count_gates(const Circuit& c, GateName g);
// CV plus CVdg.
int count_cv_family(const Circuit& c);

// JSON form: {"num_qubits": n, "ops": [{"gate": "U3", "qubits": [0],
// "params": [t, p, l]}, ...]}.
Circuit parse_circuit_json(const std::string& text);
std::string circuit_to_json(const Circuit& c);

}  // namespace cvpulse
