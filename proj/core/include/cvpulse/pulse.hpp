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
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cvpulse {

// Gaussian-square envelope: Gaussian rise on [0, tau_r) centered at tau_r,
// flat top A on [tau_r, tau_r + tau_w), Gaussian fall centered at
// tau_r + tau_w. Total duration tau_d = 2*tau_r + tau_w. The centered-edge
// form keeps the waveform continuous at the joins (value A at both).
struct PulseEnvelope {
  double amplitude_A;  // in [0, 1]
  double sigma_ns;     // > 0
  double tau_r_ns;     // >= 0, edge length
  double tau_w_ns;     // >= 0, flat-top width
};

double envelope_sample(const PulseEnvelope& e, double t_ns);  // t in [0, tau_d)
double envelope_duration(const PulseEnvelope& e);
// Closed form A*tau_w + 2*A*sigma*sqrt(pi/2)*erf(tau_r/(sqrt(2)*sigma)).
double envelope_area(const PulseEnvelope& e);

struct ScheduleInstruction {
  std::string channel;  // drive "d<i>" or control "u<j>"
  double start_ns;
  double duration_ns;   // 0 for virtual rotations
  std::string label;
};

struct PulseSchedule {
  std::vector<std::string> channels;
  std::vector<ScheduleInstruction> instructions;
  double dt_granularity_ns;
};

using QubitPair = std::pair<int, int>;

struct DeviceTimingConfig {
  double single_qubit_pulse_ns;
  double cr_edge_ns;         // fixed Gaussian flank length of CR pulses
  double dt_granularity_ns;  // defaults to 2/9 in the example config
  // Per coupled pair, the CX-calibrated CR flat-top length. Keys are
  // unordered pairs stored as (min, max).
  std::map<QubitPair, double> per_edge_cr_flat_top_ns;
  // Optional hardware control-channel numbering; absent edges fall back to
  // the synthetic id "u<c>_<t>".
  std::map<QubitPair, int> control_channel_index;
};

enum class ScheduleKind { CX, CV };

// Echo template: target rotation concurrent with control pi-pulse (plus a
// zero-duration virtual Z on the control), CR+, control pi-pulse, CR-, with
// cancellation pulses on the target channel mirroring each CR segment.
// The CR flat top comes from cfg (halved total for CV) unless overridden;
// all starts and durations are snapped up to dt granularity.
PulseSchedule build_two_qubit_schedule(
    ScheduleKind kind, const DeviceTimingConfig& cfg, QubitPair pair,
    std::optional<double> cr_flat_top_override_ns = std::nullopt);

// max over instructions of (start + duration).
double total_time(const PulseSchedule& s);

// Snap every start/duration up to a multiple of dt. Idempotent.
PulseSchedule legalize(const PulseSchedule& s, double dt_ns);

// Line-oriented export "channel,start_ns,duration_ns,label" and JSON variant.
std::string export_schedule_text(const PulseSchedule& s);
std::string export_schedule_json(const PulseSchedule& s);

}  // namespace cvpulse
