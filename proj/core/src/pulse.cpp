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

#include "cvpulse/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cvpulse {

namespace {

void require_envelope(const PulseEnvelope& e) {
  if (!(e.amplitude_A >= 0.0 && e.amplitude_A <= 1.0)) {
    throw std::invalid_argument("envelope: amplitude must lie in [0, 1]");
  }
  if (!(e.sigma_ns > 0.0)) throw std::invalid_argument("envelope: sigma must be positive");
  if (!(e.tau_r_ns >= 0.0)) throw std::invalid_argument("envelope: tau_r must be non-negative");
  if (!(e.tau_w_ns >= 0.0)) throw std::invalid_argument("envelope: tau_w must be non-negative");
}

// Smallest multiple of dt that is >= v, with slack so exact multiples
// (computed in floating point) do not round up a full step.
double snap_up(double v, double dt) {
  if (v <= 0.0) return 0.0;
  return std::ceil(v / dt - 1e-9) * dt;
}

}  // namespace

double envelope_duration(const PulseEnvelope& e) {
  require_envelope(e);
  return 2.0 * e.tau_r_ns + e.tau_w_ns;
}

double envelope_sample(const PulseEnvelope& e, double t_ns) {
  require_envelope(e);
  const double dur = 2.0 * e.tau_r_ns + e.tau_w_ns;
  if (t_ns < 0.0 || t_ns >= dur) {
    throw std::invalid_argument("envelope_sample: t outside [0, duration)");
  }
  if (t_ns < e.tau_r_ns) {
    const double d = t_ns - e.tau_r_ns;
    return e.amplitude_A * std::exp(-d * d / (2.0 * e.sigma_ns * e.sigma_ns));
  }
  if (t_ns < e.tau_r_ns + e.tau_w_ns) return e.amplitude_A;
  const double d = t_ns - (e.tau_r_ns + e.tau_w_ns);
  return e.amplitude_A * std::exp(-d * d / (2.0 * e.sigma_ns * e.sigma_ns));
}

double envelope_area(const PulseEnvelope& e) {
  require_envelope(e);
  const double flat = e.amplitude_A * e.tau_w_ns;
  const double edges = 2.0 * e.amplitude_A * e.sigma_ns * std::sqrt(std::numbers::pi / 2.0) *
                       std::erf(e.tau_r_ns / (std::sqrt(2.0) * e.sigma_ns));
  return flat + edges;
}

PulseSchedule build_two_qubit_schedule(ScheduleKind kind,
                                       const DeviceTimingConfig& cfg,
                                       QubitPair pair,
                                       std::optional<double> cr_flat_top_override_ns) {
  if (!(cfg.dt_granularity_ns > 0.0)) {
    throw std::invalid_argument("schedule: dt granularity must be positive");
  }
  if (!(cfg.single_qubit_pulse_ns > 0.0)) {
    throw std::invalid_argument("schedule: single-qubit pulse length must be positive");
  }
  if (!(cfg.cr_edge_ns >= 0.0)) {
    throw std::invalid_argument("schedule: CR edge length must be non-negative");
  }
  if (pair.first == pair.second || pair.first < 0 || pair.second < 0) {
    throw std::invalid_argument("schedule: pair must be two distinct qubit indices");
  }

  const QubitPair key{std::min(pair.first, pair.second), std::max(pair.first, pair.second)};
  double flat = 0.0;
  if (cr_flat_top_override_ns.has_value()) {
    flat = *cr_flat_top_override_ns;
    if (flat < 0.0) throw std::invalid_argument("schedule: flat-top override must be non-negative");
  } else {
    const auto it = cfg.per_edge_cr_flat_top_ns.find(key);
    if (it == cfg.per_edge_cr_flat_top_ns.end()) {
      throw std::invalid_argument("schedule: no CR calibration for the requested edge");
    }
    if (kind == ScheduleKind::CX) {
      flat = it->second;
    } else {
      // Halving the per-pulse CR span halves the conditional rotation; the
      // fixed edges are kept, so only the flat top shrinks.
      const double cx_total = it->second + 2.0 * cfg.cr_edge_ns;
      flat = cx_total / 2.0 - 2.0 * cfg.cr_edge_ns;
      if (flat < 0.0) {
        throw std::invalid_argument("schedule: CR edges too long to halve this edge's pulse");
      }
    }
  }

  const double dt = cfg.dt_granularity_ns;
  const double sq = snap_up(cfg.single_qubit_pulse_ns, dt);
  const double cr = snap_up(flat + 2.0 * cfg.cr_edge_ns, dt);

  const int control = pair.first;
  const int target = pair.second;
  const std::string dc = "d" + std::to_string(control);
  const std::string dtg = "d" + std::to_string(target);
  std::string uc;
  if (const auto it = cfg.control_channel_index.find(key); it != cfg.control_channel_index.end()) {
    uc = "u" + std::to_string(it->second);
  } else {
    uc = "u" + std::to_string(control) + "_" + std::to_string(target);
  }

  const double t1 = sq;
  const double t2 = t1 + cr;
  const double t3 = t2 + sq;

  PulseSchedule s;
  s.dt_granularity_ns = dt;
  s.channels = {dc, dtg, uc};
  s.instructions = {
      {dtg, 0.0, sq, "target_rotation"},
      {dc, 0.0, sq, "x_pi"},
      {dc, 0.0, 0.0, "virtual_z"},
      {uc, t1, cr, "cr_plus"},
      {dtg, t1, cr, "cancel_plus"},
      {dc, t2, sq, "x_pi"},
      {uc, t3, cr, "cr_minus"},
      {dtg, t3, cr, "cancel_minus"},
  };
  return s;
}

double total_time(const PulseSchedule& s) {
  double end = 0.0;
  for (const auto& i : s.instructions) end = std::max(end, i.start_ns + i.duration_ns);
  return end;
}

PulseSchedule legalize(const PulseSchedule& s, double dt_ns) {
  if (!(dt_ns > 0.0)) throw std::invalid_argument("legalize: dt must be positive");
  PulseSchedule out = s;
  out.dt_granularity_ns = dt_ns;
  for (auto& i : out.instructions) {
    i.start_ns = snap_up(i.start_ns, dt_ns);
    i.duration_ns = snap_up(i.duration_ns, dt_ns);
  }
  return out;
}

std::string export_schedule_text(const PulseSchedule& s) {
  std::string out = "channel,start_ns,duration_ns,label\n";
  char buf[64];
  for (const auto& i : s.instructions) {
    out += i.channel;
    out += ',';
    std::snprintf(buf, sizeof buf, "%.10g", i.start_ns);
    out += buf;
    out += ',';
    std::snprintf(buf, sizeof buf, "%.10g", i.duration_ns);
    out += buf;
    out += ',';
    out += i.label;
    out += '\n';
  }
  return out;
}

std::string export_schedule_json(const PulseSchedule& s) {
  nlohmann::json j;
  j["dt_granularity_ns"] = s.dt_granularity_ns;
  j["channels"] = s.channels;
  j["instructions"] = nlohmann::json::array();
  for (const auto& i : s.instructions) {
    j["instructions"].push_back({{"channel", i.channel},
                                 {"start_ns", i.start_ns},
                                 {"duration_ns", i.duration_ns},
                                 {"label", i.label}});
  }
  return j.dump(2) + "\n";
}

}  // namespace cvpulse
